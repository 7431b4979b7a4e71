//! Randić matrix, Randić index, exact characteristic polynomials and the
//! two graph energies.

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Zero};

use crate::error::Result;
use crate::graph::Graph;
use crate::matrix::{eigenvalues, Spectrum, SymMatrix};
use crate::poly::RatPoly;

/// `R(G)`: entry `(d_i d_j)^{-1/2}` on edges, zero elsewhere. Rows of
/// isolated vertices are all-zero.
pub fn randic_matrix(g: &Graph) -> SymMatrix {
    let mut m = SymMatrix::zeros(g.vertex_count());
    for (u, v) in g.edges() {
        let w = 1.0 / ((g.degree(u) * g.degree(v)) as f64).sqrt();
        m.set(u, v, w);
    }
    m
}

/// 0/1 adjacency matrix.
pub fn adjacency_matrix(g: &Graph) -> SymMatrix {
    let mut m = SymMatrix::zeros(g.vertex_count());
    for (u, v) in g.edges() {
        m.set(u, v, 1.0);
    }
    m
}

/// Sum over edges of `(d_u d_v)^{-1/2}`.
pub fn randic_index(g: &Graph) -> f64 {
    g.edges()
        .map(|(u, v)| 1.0 / ((g.degree(u) * g.degree(v)) as f64).sqrt())
        .sum()
}

pub fn randic_spectrum(g: &Graph, tol: f64) -> Result<Spectrum> {
    eigenvalues(&randic_matrix(g), tol)
}

pub fn adjacency_spectrum(g: &Graph, tol: f64) -> Result<Spectrum> {
    eigenvalues(&adjacency_matrix(g), tol)
}

/// `RE(G)`, the sum of `|ρ_i|` over the Randić spectrum.
pub fn randic_energy(g: &Graph, tol: f64) -> Result<f64> {
    Ok(randic_spectrum(g, tol)?.energy())
}

/// `E(G)`, the sum of `|λ_i|` over the adjacency spectrum.
pub fn graph_energy(g: &Graph, tol: f64) -> Result<f64> {
    Ok(adjacency_spectrum(g, tol)?.energy())
}

/// `det(λI - R(G))` with exact rational coefficients.
///
/// `R(G)` is irrational, but on the non-isolated vertices it is similar
/// (via `D^{1/2}`) to the random-walk matrix `W = D^{-1}A`, whose entries
/// are `1/d_i`. With `L = lcm(d_i)` the matrix `L·W` is integral, so its
/// characteristic polynomial comes out of an all-integer Faddeev–LeVerrier
/// recursion and rescales to that of `W` through
/// `p_W(λ) = L^{-k} p_{LW}(Lλ)`. Each isolated vertex contributes a factor
/// `λ`.
pub fn charpoly_exact(g: &Graph) -> RatPoly {
    let active: Vec<usize> = (0..g.vertex_count()).filter(|&v| g.degree(v) > 0).collect();
    let isolated = g.vertex_count() - active.len();
    let k = active.len();
    if k == 0 {
        return RatPoly::one().shift(isolated);
    }

    let lcm = active
        .iter()
        .fold(BigInt::one(), |acc, &v| acc.lcm(&BigInt::from(g.degree(v))));
    let mut position = vec![usize::MAX; g.vertex_count()];
    for (i, &v) in active.iter().enumerate() {
        position[v] = i;
    }
    let mut scaled = vec![vec![BigInt::zero(); k]; k];
    for (u, v) in g.edges() {
        let (i, j) = (position[u], position[v]);
        scaled[i][j] = &lcm / BigInt::from(g.degree(u));
        scaled[j][i] = &lcm / BigInt::from(g.degree(v));
    }

    let int_coeffs = faddeev_leverrier(&scaled);
    let lcm_q = BigRational::from_integer(lcm);
    let mut denom = BigRational::one();
    let mut coeffs = vec![BigRational::zero(); k + 1];
    for j in (0..=k).rev() {
        coeffs[j] = BigRational::from_integer(int_coeffs[j].clone()) / &denom;
        denom *= &lcm_q;
    }
    RatPoly::from_coeffs(coeffs).shift(isolated)
}

/// Characteristic polynomial `det(λI - A)` of a square integer matrix,
/// coefficients ascending, by the Faddeev–LeVerrier trace recursion:
///
/// ```text
/// M_1 = I,   c_{n-k} = -tr(A M_k) / k,   M_{k+1} = A M_k + c_{n-k} I
/// ```
///
/// Every division is exact over the integers. Products skip zero entries
/// of `A`, so sparse inputs cost `O(nnz · n)` per step.
pub fn faddeev_leverrier(a: &[Vec<BigInt>]) -> Vec<BigInt> {
    let n = a.len();
    assert!(a.iter().all(|row| row.len() == n), "matrix must be square");
    let sparse: Vec<Vec<(usize, &BigInt)>> = a
        .iter()
        .map(|row| row.iter().enumerate().filter(|(_, x)| !x.is_zero()).collect())
        .collect();

    let mut coeffs = vec![BigInt::zero(); n + 1];
    coeffs[n] = BigInt::one();
    let mut m: Vec<Vec<BigInt>> = (0..n)
        .map(|i| (0..n).map(|j| BigInt::from(u8::from(i == j))).collect())
        .collect();

    for k in 1..=n {
        let mut am = vec![vec![BigInt::zero(); n]; n];
        for (i, row) in sparse.iter().enumerate() {
            for &(j, aij) in row {
                for (dst, src) in am[i].iter_mut().zip(&m[j]) {
                    if !src.is_zero() {
                        *dst += aij * src;
                    }
                }
            }
        }
        let trace: BigInt = (0..n).map(|i| &am[i][i]).sum();
        let (q, r) = trace.div_rem(&BigInt::from(k));
        assert!(r.is_zero(), "Faddeev–LeVerrier division must be exact");
        let c = -q;
        if k < n {
            for (i, row) in am.iter_mut().enumerate() {
                row[i] += &c;
            }
            m = am;
        }
        coeffs[n - k] = c;
    }
    coeffs
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::{delete_edge, disjoint_union, generate, FamilySpec};
    use crate::matrix::DEFAULT_TOL;
    use crate::poly::frac;
    use std::f64::consts::SQRT_2;

    fn g(spec: FamilySpec) -> Graph {
        generate(&spec).unwrap()
    }

    #[test]
    fn randic_matrix_entries() {
        let p3 = randic_matrix(&g(FamilySpec::path(3)));
        assert!((p3.get(0, 1) - 0.7071067811865476).abs() < 1e-15);
        assert_eq!(p3.get(1, 2), p3.get(2, 1));
        assert_eq!(p3.get(0, 2), 0.0);
        assert_eq!(p3.trace(), 0.0);

        let k3 = randic_matrix(&g(FamilySpec::complete(3)));
        for i in 0..3 {
            for j in 0..3 {
                assert_eq!(k3.get(i, j), if i == j { 0.0 } else { 0.5 });
            }
        }

        let s4 = randic_matrix(&g(FamilySpec::star(4)));
        assert!((s4.get(0, 3) - 1.0 / 3f64.sqrt()).abs() < 1e-16);
        assert_eq!(s4.get(1, 2), 0.0);
    }

    #[test]
    fn isolated_rows_are_zero() {
        let s = delete_edge(&g(FamilySpec::star(4)), 0, 1).unwrap();
        let m = randic_matrix(&s);
        assert!((0..4).all(|j| m.get(1, j) == 0.0));
    }

    #[test]
    fn randic_index_values() {
        assert!((randic_index(&g(FamilySpec::complete(4))) - 2.0).abs() < 1e-15);
        assert!((randic_index(&g(FamilySpec::path(3))) - SQRT_2).abs() < 1e-15);
        assert!((randic_index(&g(FamilySpec::cycle(5))) - 2.5).abs() < 1e-15);
        let k5 = g(FamilySpec::complete(5));
        assert!((randic_index(&k5) - randic_matrix(&k5).entry_sum() / 2.0).abs() < 1e-14);
    }

    #[test]
    fn charpoly_examples() {
        assert_eq!(
            charpoly_exact(&g(FamilySpec::complete(3))),
            RatPoly::from_fracs([(-1, 4), (-3, 4), (0, 1), (1, 1)])
        );
        assert_eq!(
            charpoly_exact(&g(FamilySpec::path(3))),
            RatPoly::from_ints([0, -1, 0, 1])
        );
        assert_eq!(
            charpoly_exact(&g(FamilySpec::cycle(4))),
            RatPoly::from_ints([0, 0, -1, 0, 1])
        );
        assert_eq!(
            charpoly_exact(&g(FamilySpec::path(4))),
            RatPoly::from_fracs([(1, 4), (0, 1), (-5, 4), (0, 1), (1, 1)])
        );
    }

    #[test]
    fn charpoly_degenerate_graphs() {
        assert_eq!(charpoly_exact(&Graph::empty(0)), RatPoly::one());
        assert_eq!(charpoly_exact(&Graph::empty(3)), RatPoly::one().shift(3));
        let s = delete_edge(&g(FamilySpec::star(4)), 0, 1).unwrap();
        // λ · charpoly(S_3) = λ^2 (λ^2 - 1)
        assert_eq!(charpoly_exact(&s), RatPoly::from_ints([0, 0, -1, 0, 1]));
    }

    #[test]
    fn faddeev_leverrier_small() {
        let a = |rows: &[&[i64]]| -> Vec<Vec<BigInt>> {
            rows.iter().map(|r| r.iter().map(|&x| BigInt::from(x)).collect()).collect()
        };
        // [[2,1],[1,3]]: λ^2 - 5λ + 5
        let c = faddeev_leverrier(&a(&[&[2, 1], &[1, 3]]));
        assert_eq!(c, vec![BigInt::from(5), BigInt::from(-5), BigInt::from(1)]);
        assert_eq!(faddeev_leverrier(&[]), vec![BigInt::one()]);
        let c = faddeev_leverrier(&a(&[&[0, 1, 0], &[0, 0, 1], &[6, -11, 6]]));
        assert_eq!(
            c,
            vec![-6, 11, -6, 1].into_iter().map(BigInt::from).collect::<Vec<_>>()
        );
    }

    #[test]
    fn eigenvalue_examples() {
        let k3 = randic_spectrum(&g(FamilySpec::complete(3)), DEFAULT_TOL).unwrap();
        for (x, e) in k3.values().iter().zip([1.0, -0.5, -0.5]) {
            assert!((x - e).abs() < 1e-14);
        }
        let c4 = randic_spectrum(&g(FamilySpec::cycle(4)), DEFAULT_TOL).unwrap();
        for (x, e) in c4.values().iter().zip([1.0, 0.0, 0.0, -1.0]) {
            assert!((x - e).abs() < 1e-14);
        }
    }

    #[test]
    fn energy_examples() {
        let re = |s| randic_energy(&g(s), DEFAULT_TOL).unwrap();
        assert!((re(FamilySpec::complete(5)) - 2.0).abs() < 1e-12);
        assert!((re(FamilySpec::friendship(3)) - 4.0).abs() < 1e-12);
        assert!((re(FamilySpec::path(5)) - 3.414213562373095).abs() < 1e-12);

        let e = |s| graph_energy(&g(s), DEFAULT_TOL).unwrap();
        assert!((e(FamilySpec::complete(2)) - 2.0).abs() < 1e-12);
        assert!((e(FamilySpec::path(3)) - 2.8284271247461903).abs() < 1e-12);
        assert!((e(FamilySpec::cycle(4)) - 4.0).abs() < 1e-12);
    }

    #[test]
    fn union_energy_adds() {
        let a = g(FamilySpec::friendship(2));
        let b = g(FamilySpec::path(4));
        let u = disjoint_union(&a, &b);
        let lhs = randic_energy(&u, DEFAULT_TOL).unwrap();
        let rhs = randic_energy(&a, DEFAULT_TOL).unwrap() + randic_energy(&b, DEFAULT_TOL).unwrap();
        assert!((lhs - rhs).abs() < 1e-9);
        assert_eq!(charpoly_exact(&u), charpoly_exact(&a) * charpoly_exact(&b));
    }

    #[test]
    fn second_coefficient_identity() {
        let graph = g(FamilySpec::complete_bipartite(2, 3).minus_edge());
        let p = charpoly_exact(&graph);
        let n = graph.vertex_count();
        assert!(p.coeff(n - 1).is_zero());
        let expected: BigRational = graph
            .edges()
            .map(|(u, v)| frac(1, (graph.degree(u) * graph.degree(v)) as i64))
            .sum();
        assert_eq!(p.coeff(n - 2), -expected);
    }
}
