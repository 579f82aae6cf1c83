//! Shared fixtures for the criterion benches.

use coxperc::{CosetTable, CoxeterGroup, GenSet};

/// A group with the quotient by all generators but the first.
pub fn maximal_quotient(name: &str) -> (CoxeterGroup, CosetTable) {
    let group = CoxeterGroup::builtin(name).expect("built-in");
    let subset = group.system().all().difference(GenSet::single(0));
    let table = group.quotient(subset).expect("within cap");
    (group, table)
}
