//! Generalized wheels and clique joins.
//!
//! A generalized wheel `C_S` is the cycle `v_0 .. v_{n-1}` plus an apex with
//! `a_i` parallel spokes to `v_i`; the string `a_0, .., a_{n-1}` is its
//! phi-string. Drawn with the apex inside the cycle, consecutive spokes
//! `e_j`, `e_{j+1}` bound face `F_j`, and the last face wraps around to `e_1`.

use std::fmt;

use crate::error::{Error, Result};
use crate::multigraph::MultiGraph;
use crate::outerplanar::chromatic_outerplanar;
use crate::polyring::{chromatic_cycle, falling_factorial, IntPoly};

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct PhiString {
    values: Vec<u32>,
}

impl PhiString {
    pub fn new(values: Vec<u32>) -> Result<Self> {
        if values.is_empty() {
            return Err(Error::InvalidSize { min: 1, got: 0 });
        }
        Ok(PhiString { values })
    }

    pub fn values(&self) -> &[u32] {
        &self.values
    }

    /// Number of rim vertices.
    pub fn len(&self) -> usize {
        self.values.len()
    }

    pub fn is_empty(&self) -> bool {
        false
    }

    /// Number of spokes.
    pub fn spokes(&self) -> usize {
        self.values.iter().map(|&a| a as usize).sum()
    }

    /// The same wheel with every spoke bundle collapsed to one spoke.
    pub fn reduced(&self) -> PhiString {
        PhiString { values: self.values.iter().map(|&a| a.min(1)).collect() }
    }

    /// `C_S` as a multigraph: rim `0..n`, apex `n`.
    pub fn realize(&self) -> MultiGraph {
        let n = self.len();
        let mut edges: Vec<(usize, usize)> = (0..n).map(|i| (i, (i + 1) % n)).collect();
        for (i, &a) in self.values.iter().enumerate() {
            edges.extend(std::iter::repeat_n((i, n), a as usize));
        }
        MultiGraph::new(n + 1, edges).expect("rim and spokes are in range")
    }

    /// Rim position of every spoke, in clockwise order.
    fn spoke_feet(&self) -> Vec<usize> {
        self.values
            .iter()
            .enumerate()
            .flat_map(|(i, &a)| std::iter::repeat_n(i, a as usize))
            .collect()
    }
}

impl fmt::Display for PhiString {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, a) in self.values.iter().enumerate() {
            if i > 0 {
                f.write_str(",")?;
            }
            write!(f, "{a}")?;
        }
        Ok(())
    }
}

/// Phi-string of the dual wheel: entry `j` counts the rim edges on face
/// `F_j`, i.e. the clockwise gap from spoke `e_j` to spoke `e_{j+1}`.
pub fn phi_dual(phi: &PhiString) -> Result<PhiString> {
    let feet = phi.spoke_feet();
    if feet.is_empty() {
        return Err(Error::NoSpokes);
    }
    let n = phi.len();
    let s = feet.len();
    let values = (0..s)
        .map(|j| {
            let (p, q) = (feet[j], feet[(j + 1) % s]);
            if j + 1 == s {
                (q + n - p) as u32
            } else {
                (q - p) as u32
            }
        })
        .collect();
    Ok(PhiString { values })
}

/// Bounded faces of `C_S` and the groups of cycle lengths behind each term of
/// the spoke-by-spoke deletion-contraction sum.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FaceDecomposition {
    /// `f_1 .. f_s`.
    pub face_sizes: Vec<usize>,
    /// `u_i = 2 + sum_{j >= i} (f_j - 2)`: the face left after deleting
    /// spokes `e_{i+1} .. e_s`. Index `i - 1`.
    pub u: Vec<usize>,
    /// Cycle lengths whose chromatic polynomials make up term `i`, glued along
    /// `i - 1` edges. Index `i - 1`.
    pub groups: Vec<Vec<usize>>,
}

pub fn face_sizes(phi: &PhiString) -> Result<FaceDecomposition> {
    let dual = phi_dual(phi)?;
    let f: Vec<usize> = dual.values.iter().map(|&d| d as usize + 2).collect();
    let s = f.len();
    let mut u = vec![0; s];
    let mut acc = 2;
    for i in (0..s).rev() {
        acc += f[i] - 2;
        u[i] = acc;
    }
    let mut groups = vec![vec![phi.len()]];
    for i in 2..=s {
        let mut g: Vec<usize> = f[..i - 2].to_vec();
        g.push(f[i - 2] - 1);
        g.push(u[i - 1] - 1);
        groups.push(g);
    }
    Ok(FaceDecomposition { face_sizes: f, u, groups })
}

/// `K_n` joined to an apex; `mult[v]` parallel edges from the apex to `v`.
pub fn chromatic_clique_join(n: usize, mult: &[u32]) -> Result<IntPoly> {
    if n < 1 {
        return Err(Error::InvalidSize { min: 1, got: n });
    }
    if mult.len() != n {
        return Err(Error::InvalidSize { min: n, got: mult.len() });
    }
    let s = mult.iter().filter(|&&m| m > 0).count() as i64;
    Ok(IntPoly::linear(-s).mul(&falling_factorial(n)))
}

/// Chromatic polynomial of `C_S` from the closed product form of each term.
pub fn chromatic_wheel_telescoped(phi: &PhiString) -> Result<IntPoly> {
    let phi = phi.reduced();
    let n = phi.len();
    let rim = chromatic_cycle(n)?;
    match phi.spokes() {
        0 => return Ok(rim.mul(&IntPoly::t())),
        1 => return Ok(rim.mul(&IntPoly::linear(-1))),
        _ => {}
    }
    let dec = face_sizes(&phi)?;
    let edge = chromatic_cycle(2)?;
    let mut total = rim.mul(&IntPoly::t());
    for (i, group) in dec.groups.iter().enumerate() {
        let factors = group.iter().map(|&j| chromatic_cycle(j)).collect::<Result<Vec<_>>>()?;
        let term = IntPoly::product(factors).exact_div(&edge.pow(i as u32))?;
        total = &total - &term;
    }
    Ok(total)
}

/// `C_S^{i}/e_i`: rim plus spokes `e_1 .. e_i` with `e_i` contracted.
fn contracted_term(n: usize, feet: &[usize], i: usize) -> MultiGraph {
    let hub = feet[i - 1];
    let mut edges: Vec<(usize, usize)> = (0..n).map(|k| (k, (k + 1) % n)).collect();
    edges.extend(feet[..i - 1].iter().map(|&p| (p, hub)));
    MultiGraph::new(n, edges).expect("rim and spokes are in range")
}

/// Chromatic polynomial of `C_S` by adding spokes one at a time and
/// evaluating each contracted graph through its block and face structure.
/// Does not reduce multiplicities; repeated spokes contract to loops.
pub fn chromatic_wheel_literal(phi: &PhiString) -> Result<IntPoly> {
    let n = phi.len();
    let feet = phi.spoke_feet();
    let mut total = chromatic_cycle(n)?.mul(&IntPoly::t());
    for i in 1..=feet.len() {
        total = &total - &chromatic_outerplanar(&contracted_term(n, &feet, i))?;
    }
    Ok(total)
}

pub fn flow_wheel(phi: &PhiString) -> Result<IntPoly> {
    match phi.spokes() {
        0 => Ok(IntPoly::linear(-1)),
        1 => Ok(IntPoly::zero()),
        _ => chromatic_wheel_telescoped(&phi_dual(phi)?)?.exact_div(&IntPoly::t()),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::oracle::{oracle_chromatic, oracle_flow};

    fn phi(v: &[u32]) -> PhiString {
        PhiString::new(v.to_vec()).unwrap()
    }

    fn p(c: &[i64]) -> IntPoly {
        IntPoly::from_i64s(c)
    }

    #[test]
    fn long_mixed_string() {
        let x = phi(&[1, 0, 1, 2, 0, 0, 1, 4, 0, 1, 1, 0, 3, 0, 0, 0]);
        let d = phi_dual(&x).unwrap();
        assert_eq!(d.values(), &[2, 1, 0, 3, 1, 0, 0, 0, 2, 1, 2, 0, 0, 4]);
        assert_eq!(d.to_string(), "2,1,0,3,1,0,0,0,2,1,2,0,0,4");
    }

    #[test]
    fn dual_examples() {
        assert_eq!(phi_dual(&phi(&[1; 6])).unwrap(), phi(&[1; 6]));
        assert_eq!(phi_dual(&phi(&[0, 0])), Err(Error::NoSpokes));
        assert_eq!(phi_dual(&phi(&[2, 0, 0])).unwrap().values(), &[0, 3]);
        assert_eq!(phi_dual(&phi(&[0, 1, 0])).unwrap().values(), &[3]);
        assert_eq!(PhiString::new(vec![]), Err(Error::InvalidSize { min: 1, got: 0 }));
    }

    #[test]
    fn face_size_examples() {
        assert_eq!(face_sizes(&phi(&[1; 4])).unwrap().face_sizes, vec![3; 4]);
        assert_eq!(face_sizes(&phi(&[2, 0, 0])).unwrap().face_sizes, vec![2, 5]);
        assert_eq!(face_sizes(&phi(&[1, 1])).unwrap().face_sizes, vec![3, 3]);
    }

    #[test]
    fn clique_join_examples() {
        let tm2 = p(&[-2, 1]);
        assert_eq!(chromatic_clique_join(3, &[1, 1, 0]).unwrap(), p(&[0, -1, 1]).mul(&tm2.pow(2)));
        assert_eq!(chromatic_clique_join(2, &[0, 0]).unwrap(), p(&[0, 0, -1, 1]));
        assert_eq!(chromatic_clique_join(4, &[1, 3, 1, 2]).unwrap(), falling_factorial(5));
        assert!(chromatic_clique_join(0, &[]).is_err());
        assert!(chromatic_clique_join(2, &[1]).is_err());
    }

    #[test]
    fn wheel_examples() {
        let tm2 = p(&[-2, 1]);
        let w4 = &tm2.pow(4) + &tm2;
        assert_eq!(chromatic_wheel_telescoped(&phi(&[1; 4])).unwrap(), w4.mul(&IntPoly::t()));
        assert_eq!(flow_wheel(&phi(&[1; 4])).unwrap(), w4);

        let fan = phi(&[1, 0, 1]);
        assert_eq!(
            chromatic_wheel_telescoped(&fan).unwrap(),
            oracle_chromatic(&fan.realize()).unwrap()
        );
        assert_eq!(
            chromatic_wheel_telescoped(&phi(&[2, 0, 3, 1])).unwrap(),
            chromatic_wheel_telescoped(&phi(&[1, 0, 1, 1])).unwrap()
        );
        assert!(flow_wheel(&phi(&[0, 1, 0])).unwrap().is_zero());
        assert_eq!(flow_wheel(&phi(&[0, 0, 0])).unwrap(), p(&[-1, 1]));
        let x = phi(&[2, 0]);
        assert_eq!(flow_wheel(&x).unwrap(), oracle_flow(&x.realize()).unwrap());
    }

    #[test]
    fn both_routes_agree_with_oracle() {
        for v in [&[1, 1, 1][..], &[1, 0, 2, 1], &[3], &[0, 2], &[1, 1, 0, 0, 1], &[2, 2, 2]] {
            let x = phi(v);
            let want = oracle_chromatic(&x.realize()).unwrap();
            assert_eq!(chromatic_wheel_telescoped(&x).unwrap(), want, "{x}");
            assert_eq!(chromatic_wheel_literal(&x).unwrap(), want, "{x}");
            assert_eq!(flow_wheel(&x).unwrap(), oracle_flow(&x.realize()).unwrap(), "{x}");
        }
    }
}
