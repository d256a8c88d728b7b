//! Exact feasibility of the transportation system behind the marriage
//! condition.
//!
//! Boys (rows) each ship one unit, girl `j` (column) demands `demand[j]`, and
//! boy `i` may ship to girl `j` only when bit `j` of `adjacency[i]` is set.
//! The polytope has integral vertices, so an arc can carry positive flow in
//! some solution iff some integral assignment uses it. Averaging one such
//! assignment per arc gives a solution that is strictly positive on every arc.

use num_traits::{One, Zero};

use crate::rational::{int, Rational};

/// An integral solution: `assignment[i]` is the girl boy `i` ships to.
/// Each girl `j` receives exactly `demand[j]` boys.
pub fn assignment(adjacency: &[u64], demand: &[usize]) -> Option<Vec<usize>> {
    assignment_with(adjacency, demand, None)
}

fn assignment_with(adjacency: &[u64], demand: &[usize], forced: Option<(usize, usize)>) -> Option<Vec<usize>> {
    let boys = adjacency.len();
    if demand.iter().sum::<usize>() != boys {
        return None;
    }
    let mut capacity = demand.to_vec();
    let mut wife: Vec<Option<usize>> = vec![None; boys];
    if let Some((i, j)) = forced {
        if adjacency[i] & (1 << j) == 0 || capacity[j] == 0 {
            return None;
        }
        capacity[j] -= 1;
        wife[i] = Some(j);
    }
    let mut husbands: Vec<Vec<usize>> = vec![Vec::new(); demand.len()];
    for boy in 0..boys {
        if wife[boy].is_some() {
            continue;
        }
        let mut seen = vec![false; demand.len()];
        if !augment(boy, adjacency, &capacity, &mut husbands, &mut wife, &mut seen) {
            return None;
        }
    }
    Some(wife.into_iter().map(|w| w.expect("every boy is married")).collect())
}

fn augment(
    boy: usize,
    adjacency: &[u64],
    capacity: &[usize],
    husbands: &mut [Vec<usize>],
    wife: &mut [Option<usize>],
    seen: &mut [bool],
) -> bool {
    let mut mask = adjacency[boy];
    while mask != 0 {
        let girl = mask.trailing_zeros() as usize;
        mask &= mask - 1;
        if seen[girl] {
            continue;
        }
        seen[girl] = true;
        if husbands[girl].len() < capacity[girl] {
            husbands[girl].push(boy);
            wife[boy] = Some(girl);
            return true;
        }
        for slot in 0..husbands[girl].len() {
            let other = husbands[girl][slot];
            if augment(other, adjacency, capacity, husbands, wife, seen) {
                husbands[girl][slot] = boy;
                wife[boy] = Some(girl);
                return true;
            }
        }
    }
    false
}

/// A solution `x[i][j]` with `Σ_j x[i][j] = 1`, `Σ_i x[i][j] = demand[j]`,
/// `x[i][j] > 0` on every allowed arc and zero elsewhere, if one exists.
pub fn strictly_positive_solution(adjacency: &[u64], demand: &[usize]) -> Option<Vec<Vec<Rational>>> {
    let girls = demand.len();
    let mut witnesses = Vec::new();
    for (i, &mask) in adjacency.iter().enumerate() {
        for j in 0..girls {
            if mask & (1 << j) != 0 {
                witnesses.push(assignment_with(adjacency, demand, Some((i, j)))?);
            }
        }
    }
    if witnesses.is_empty() {
        return (adjacency.is_empty() && demand.iter().all(|&d| d == 0)).then(Vec::new);
    }
    let weight = Rational::one() / int(witnesses.len() as i64);
    let mut x = vec![vec![Rational::zero(); girls]; adjacency.len()];
    for w in &witnesses {
        for (i, &j) in w.iter().enumerate() {
            x[i][j] += &weight;
        }
    }
    debug_assert!(is_strictly_positive_solution(&x, adjacency, demand));
    Some(x)
}

/// Checks the equations, the support and strict positivity exactly.
pub fn is_strictly_positive_solution(x: &[Vec<Rational>], adjacency: &[u64], demand: &[usize]) -> bool {
    let rows_ok = x.iter().zip(adjacency).all(|(row, &mask)| {
        row.iter().sum::<Rational>() == Rational::one()
            && row.iter().enumerate().all(|(j, v)| {
                if mask & (1 << j) != 0 {
                    *v > Rational::zero()
                } else {
                    v.is_zero()
                }
            })
    });
    let cols_ok = demand
        .iter()
        .enumerate()
        .all(|(j, &d)| x.iter().map(|row| &row[j]).sum::<Rational>() == int(d as i64));
    rows_ok && cols_ok
}
