//! Ordered sets of variable names.
//!
//! A `VarSet` fixes the meaning of exponent-vector positions for every
//! polynomial that references it. Names are unique and the order never
//! changes once constructed; polynomials hold the set behind an `Arc` so
//! equality checks are usually a pointer comparison.

use std::fmt;
use std::sync::Arc;

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct VarSet {
    names: Vec<String>,
}

impl VarSet {
    /// Build a shared variable set. Panics on duplicate names.
    pub fn shared<I, S>(names: I) -> Arc<VarSet>
    where
        I: IntoIterator<Item = S>,
        S: Into<String>,
    {
        let names: Vec<String> = names.into_iter().map(Into::into).collect();
        for i in 0..names.len() {
            for j in i + 1..names.len() {
                assert_ne!(names[i], names[j], "VarSet: duplicate variable name");
            }
        }
        Arc::new(VarSet { names })
    }

    /// The empty variable set (polynomials over it are plain rationals).
    pub fn empty() -> Arc<VarSet> {
        Arc::new(VarSet { names: Vec::new() })
    }

    /// `x1, ..., xL`.
    pub fn xs(l: usize) -> Arc<VarSet> {
        Self::shared((1..=l).map(|i| format!("x{i}")))
    }

    /// `x1, ..., xL, z`.
    pub fn xs_z(l: usize) -> Arc<VarSet> {
        Self::shared((1..=l).map(|i| format!("x{i}")).chain(["z".to_string()]))
    }

    /// A single variable.
    pub fn single(name: &str) -> Arc<VarSet> {
        Self::shared([name.to_string()])
    }

    pub fn len(&self) -> usize {
        self.names.len()
    }

    pub fn is_empty(&self) -> bool {
        self.names.is_empty()
    }

    pub fn names(&self) -> &[String] {
        &self.names
    }

    pub fn name(&self, i: usize) -> &str {
        &self.names[i]
    }

    pub fn index_of(&self, name: &str) -> Option<usize> {
        self.names.iter().position(|n| n == name)
    }

    /// Fast equality for shared sets: pointer identity first, contents after.
    pub fn same(a: &Arc<VarSet>, b: &Arc<VarSet>) -> bool {
        Arc::ptr_eq(a, b) || a.names == b.names
    }
}

impl fmt::Display for VarSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.names.join(","))
    }
}
