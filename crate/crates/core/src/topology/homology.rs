use super::complex::CechComplex;
use crate::error::Result;
use crate::geometry::BettiVector;

/// `a ^= b` for columns stored as sorted row indices.
fn xor_into(a: &mut Vec<usize>, b: &[usize]) {
    let mut out = Vec::with_capacity(a.len() + b.len());
    let (mut i, mut j) = (0, 0);
    while i < a.len() && j < b.len() {
        match a[i].cmp(&b[j]) {
            std::cmp::Ordering::Less => {
                out.push(a[i]);
                i += 1;
            }
            std::cmp::Ordering::Greater => {
                out.push(b[j]);
                j += 1;
            }
            std::cmp::Ordering::Equal => {
                i += 1;
                j += 1;
            }
        }
    }
    out.extend_from_slice(&a[i..]);
    out.extend_from_slice(&b[j..]);
    *a = out;
}

/// Rank over GF(2) of the matrix whose columns are given as sorted row sets.
pub(crate) fn gf2_rank(rows: usize, columns: impl IntoIterator<Item = Vec<usize>>) -> usize {
    // pivot[r]: reduced column whose lowest entry is row r.
    let mut pivot: Vec<Option<Vec<usize>>> = vec![None; rows];
    let mut rank = 0;
    for mut col in columns {
        while let Some(&low) = col.last() {
            match &pivot[low] {
                Some(p) => xor_into(&mut col, p),
                None => {
                    pivot[low] = Some(col);
                    rank += 1;
                    break;
                }
            }
        }
    }
    rank
}

/// Ranks of the boundary maps from edges and from triangles.
pub fn boundary_ranks(complex: &CechComplex) -> Result<(usize, usize)> {
    complex.validate()?;
    let r1 = gf2_rank(
        complex.vertex_count,
        complex.edges.iter().map(|e| e.to_vec()),
    );
    let r2 = gf2_rank(
        complex.edges.len(),
        complex.triangles.iter().map(|&[a, b, c]| {
            let mut col: Vec<usize> = [[a, b], [a, c], [b, c]]
                .iter()
                .map(|&e| complex.edge_index(e).expect("validated"))
                .collect();
            col.sort_unstable();
            col
        }),
    );
    Ok((r1, r2))
}

/// `b0 = V - rank ∂1`, `b1 = E - rank ∂1 - rank ∂2` over GF(2).
pub fn betti_numbers(complex: &CechComplex) -> Result<BettiVector> {
    let (r1, r2) = boundary_ranks(complex)?;
    Ok(BettiVector::new(
        complex.vertex_count - r1,
        complex.edges.len() - r1 - r2,
    ))
}

/// `F - rank ∂2`: 2-cycles of the triangle skeleton. Together with
/// [`betti_numbers`] this satisfies `b0 - b1 + b2 = V - E + F`.
pub fn second_betti(complex: &CechComplex) -> Result<usize> {
    let (_, r2) = boundary_ranks(complex)?;
    Ok(complex.triangles.len() - r2)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::Error;

    fn complex(v: usize, edges: &[[usize; 2]], triangles: &[[usize; 3]]) -> CechComplex {
        CechComplex {
            vertex_count: v,
            edges: edges.to_vec(),
            triangles: triangles.to_vec(),
            radius: 1.0,
        }
    }

    #[test]
    fn hand_computed_examples() {
        assert_eq!(
            betti_numbers(&complex(1, &[], &[])).unwrap(),
            BettiVector::new(1, 0)
        );
        let hollow = complex(3, &[[0, 1], [0, 2], [1, 2]], &[]);
        assert_eq!(betti_numbers(&hollow).unwrap(), BettiVector::new(1, 1));
        let filled = complex(3, &[[0, 1], [0, 2], [1, 2]], &[[0, 1, 2]]);
        assert_eq!(betti_numbers(&filled).unwrap(), BettiVector::new(1, 0));
        assert_eq!(
            betti_numbers(&complex(0, &[], &[])).unwrap(),
            BettiVector::new(0, 0)
        );
    }

    #[test]
    fn hollow_tetrahedron_has_a_two_cycle() {
        let e = [[0, 1], [0, 2], [0, 3], [1, 2], [1, 3], [2, 3]];
        let t = [[0, 1, 2], [0, 1, 3], [0, 2, 3], [1, 2, 3]];
        let c = complex(4, &e, &t);
        assert_eq!(betti_numbers(&c).unwrap(), BettiVector::new(1, 0));
        assert_eq!(second_betti(&c).unwrap(), 1);
        assert_eq!(c.euler_characteristic(), 2);
    }

    #[test]
    fn two_loops_and_components() {
        // Two squares sharing nothing plus an isolated vertex.
        let e = [
            [0, 1],
            [0, 3],
            [1, 2],
            [2, 3],
            [4, 5],
            [4, 7],
            [5, 6],
            [6, 7],
        ];
        let c = complex(9, &e, &[]);
        assert_eq!(betti_numbers(&c).unwrap(), BettiVector::new(3, 2));
    }

    #[test]
    fn malformed_is_rejected() {
        let bad = complex(3, &[[0, 1], [1, 2]], &[[0, 1, 2]]);
        assert!(matches!(
            betti_numbers(&bad),
            Err(Error::MalformedComplex(_))
        ));
    }

    #[test]
    fn rank_of_dependent_columns() {
        // Columns {0,1}, {1,2}, {0,2} sum to zero.
        assert_eq!(gf2_rank(3, vec![vec![0, 1], vec![1, 2], vec![0, 2]]), 2);
        assert_eq!(gf2_rank(3, vec![vec![], vec![2]]), 1);
    }
}
