//! Named group specifications such as `Z5`, `D4`, `S3`, `Q8`,
//! `heisenberg3` and products like `Z3xZ3`.

use crate::group::{constructors, FiniteGroup, GroupError};

/// Parses a named group. Factors of a product are separated by `x`.
pub fn parse_group_name(spec: &str) -> Result<FiniteGroup, GroupError> {
    let spec = spec.trim();
    let mut factors = spec.split('x');
    let first = factors.next().filter(|s| !s.is_empty()).ok_or_else(|| bad(spec))?;
    let mut g = factor(first)?;
    for f in factors {
        g = constructors::direct_product(&g, &factor(f)?)?;
    }
    Ok(g)
}

fn bad(spec: &str) -> GroupError {
    GroupError::InvalidParameter(format!("unknown group `{spec}` (expected Z<n>, D<n>, S<n>, Q8, heisenberg<p> or a product like Z3xZ3)"))
}

fn number(spec: &str, digits: &str) -> Result<usize, GroupError> {
    if digits.is_empty() || !digits.bytes().all(|b| b.is_ascii_digit()) {
        return Err(bad(spec));
    }
    digits.parse().map_err(|_| bad(spec))
}

fn factor(spec: &str) -> Result<FiniteGroup, GroupError> {
    if spec == "Q8" {
        return constructors::quaternion8();
    }
    if let Some(p) = spec.strip_prefix("heisenberg") {
        return constructors::heisenberg(number(spec, p)?);
    }
    let (head, digits) = spec.split_at(spec.find(|c: char| c.is_ascii_digit()).unwrap_or(spec.len()));
    let n = number(spec, digits)?;
    match head {
        "Z" => constructors::cyclic(n),
        "D" => constructors::dihedral(n),
        "S" => constructors::symmetric(n),
        _ => Err(bad(spec)),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn named_groups() {
        assert_eq!(parse_group_name("Z5").unwrap().order(), 5);
        assert_eq!(parse_group_name("D4").unwrap().order(), 8);
        assert_eq!(parse_group_name("S3").unwrap().label(), "S3");
        assert_eq!(parse_group_name("Q8").unwrap().order(), 8);
        assert_eq!(parse_group_name("heisenberg3").unwrap().order(), 27);
        let p = parse_group_name("Z3xZ3").unwrap();
        assert_eq!((p.order(), p.label().as_str()), (9, "Z3xZ3"));
        assert_eq!(parse_group_name("Z2xZ2xZ2").unwrap().order(), 8);
    }

    #[test]
    fn rejects_malformed_names() {
        for s in ["", "Z", "Zx", "X5", "Z-1", "Z0", "heisenberg4", "Z3x", "S9", "Q9", "z5"] {
            assert!(parse_group_name(s).is_err(), "{s}");
        }
    }
}
