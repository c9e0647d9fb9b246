//! Natural permutation representations of the symmetric, alternating,
//! cyclic and dihedral groups.

use crate::error::{Error, Result};
use crate::permgroup::{PermGroup, Permutation};

fn cycle(points: impl IntoIterator<Item = usize>, degree: usize) -> Result<Permutation> {
    let mut images: Vec<u32> = (0..degree as u32).collect();
    let pts: Vec<usize> = points.into_iter().collect();
    for (i, &x) in pts.iter().enumerate() {
        images[x] = pts[(i + 1) % pts.len()] as u32;
    }
    Permutation::from_images(images)
}

fn check_degree(n: usize) -> Result<()> {
    if n == 0 {
        return Err(Error::InvalidArgument("degree must be positive".into()));
    }
    Ok(())
}

/// `S_n` on `n` points, generated by `(1 2)` and `(1 … n)`.
pub fn symmetric(n: usize) -> Result<PermGroup> {
    check_degree(n)?;
    let gens = if n == 1 {
        vec![]
    } else {
        vec![cycle([0, 1], n)?, cycle(0..n, n)?]
    };
    PermGroup::new(format!("S{n}"), n, gens)
}

/// `A_n` on `n` points, generated by `(1 2 3)` and an even long cycle:
/// `(1 … n)` for odd `n`, `(2 … n)` for even `n`.
pub fn alternating(n: usize) -> Result<PermGroup> {
    check_degree(n)?;
    let gens = match n {
        1 | 2 => vec![],
        _ if n % 2 == 1 => vec![cycle([0, 1, 2], n)?, cycle(0..n, n)?],
        _ => vec![cycle([0, 1, 2], n)?, cycle(1..n, n)?],
    };
    PermGroup::new(format!("A{n}"), n, gens)
}

pub fn cyclic(n: usize) -> Result<PermGroup> {
    check_degree(n)?;
    PermGroup::new(format!("C{n}"), n, vec![cycle(0..n, n)?])
}

/// Dihedral group of order `2m` on the vertices of an `m`-gon, named `D{2m}`.
pub fn dihedral(m: usize) -> Result<PermGroup> {
    if m < 3 {
        return Err(Error::InvalidArgument(format!("a polygon needs at least 3 vertices, got {m}")));
    }
    let reflection: Vec<u32> = (0..m).map(|i| ((m - i) % m) as u32).collect();
    PermGroup::new(
        format!("D{}", 2 * m),
        m,
        vec![cycle(0..m, m)?, Permutation::from_images(reflection)?],
    )
}

#[cfg(test)]
mod tests {
    use num_bigint::BigUint;

    use super::*;
    use crate::symchar::factorial;

    #[test]
    fn orders() {
        for n in 1..=7 {
            assert_eq!(symmetric(n).unwrap().order(), factorial(n));
            let half = if n >= 2 { factorial(n) / 2u32 } else { BigUint::from(1u32) };
            assert_eq!(alternating(n).unwrap().order(), half);
            assert_eq!(cyclic(n).unwrap().order(), BigUint::from(n));
        }
        assert_eq!(dihedral(5).unwrap().order(), BigUint::from(10u32));
        assert_eq!(dihedral(5).unwrap().name(), "D10");
    }
}
