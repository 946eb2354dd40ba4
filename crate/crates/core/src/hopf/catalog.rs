//! Built-in algebras, addressed as `function_algebra:NAME` or
//! `group_algebra:NAME`.

use super::algebra::HopfStarAlgebra;
use super::builders::{function_algebra, group_algebra};
use super::monoid::*;
use crate::error::{Error, Result};

pub const GROUP_NAMES: [&str; 5] = ["trivial", "Z2", "Z3", "Z2xZ2", "S3"];
pub const MONOID_NAMES: [&str; 3] = ["left-zero", "right-zero+1", "one-zero"];

pub fn group_by_name(name: &str) -> Result<FiniteGroup> {
    Ok(match name {
        "trivial" => trivial_group(),
        "Z2" => cyclic(2),
        "Z3" => cyclic(3),
        "Z2xZ2" => klein_four(),
        "S3" => symmetric3(),
        other => return Err(Error::InvalidArgument(format!("unknown group `{other}`"))),
    })
}

pub fn monoid_by_name(name: &str) -> Result<FiniteMonoid> {
    match name {
        "left-zero" => Ok(left_zero_semigroup()),
        "right-zero+1" => Ok(right_zero_with_identity()),
        "one-zero" => Ok(one_zero_monoid()),
        other => group_by_name(other).map(|g| g.monoid().clone()),
    }
}

/// Resolve `function_algebra:NAME` or `group_algebra:NAME`.
pub fn algebra_by_name(spec: &str) -> Result<HopfStarAlgebra> {
    let (kind, name) = spec
        .split_once(':')
        .ok_or_else(|| Error::InvalidArgument(format!("expected KIND:NAME, got `{spec}`")))?;
    match kind {
        "function_algebra" => Ok(function_algebra(&monoid_by_name(name)?)),
        "group_algebra" => Ok(group_algebra(&group_by_name(name)?)),
        other => Err(Error::InvalidArgument(format!("unknown algebra kind `{other}`"))),
    }
}

/// Every built-in algebra: function and group algebras of the catalog
/// groups, then function algebras of the extra monoids.
pub fn catalog_algebras() -> Vec<HopfStarAlgebra> {
    let mut out = Vec::new();
    for g in GROUP_NAMES {
        let g = group_by_name(g).expect("catalog group");
        out.push(function_algebra(g.monoid()));
        out.push(group_algebra(&g));
    }
    for m in MONOID_NAMES {
        out.push(function_algebra(&monoid_by_name(m).expect("catalog monoid")));
    }
    out
}

pub fn catalog_names() -> Vec<String> {
    catalog_algebras().iter().map(|h| h.name().to_string()).collect()
}
