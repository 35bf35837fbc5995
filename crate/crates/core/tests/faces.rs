//! Face sizes of generalized wheels checked against face tracing on an
//! explicit rotation system.

mod common;

use proptest::prelude::*;
use vjpoly::wheels::{face_sizes, PhiString};

/// Dart `2e` runs along edge `e` from its first endpoint, `2e + 1` back.
struct Embedded {
    ends: Vec<(usize, usize)>,
    /// Counter-clockwise dart order around every vertex.
    rotation: Vec<Vec<usize>>,
}

/// Rim `0..n` drawn clockwise on a circle with the apex `n` at the centre.
/// Parallel spokes at a rim vertex fan out from the side of its predecessor.
fn embed(phi: &PhiString) -> Embedded {
    let n = phi.len();
    let mut ends: Vec<(usize, usize)> = (0..n).map(|i| (i, (i + 1) % n)).collect();
    let mut rotation = vec![Vec::new(); n + 1];
    let mut apex_darts = Vec::new();
    for (i, &a) in phi.values().iter().enumerate() {
        let mut rot = vec![2 * ((i + n - 1) % n) + 1];
        for copy in 0..a {
            let e = ends.len();
            ends.push((i, n));
            rot.push(2 * e);
            apex_darts.push((i, copy, 2 * e + 1));
        }
        rot.push(2 * i);
        rotation[i] = rot;
    }
    apex_darts.sort_by(|a, b| b.0.cmp(&a.0).then(b.1.cmp(&a.1)));
    rotation[n] = apex_darts.into_iter().map(|(_, _, d)| d).collect();
    Embedded { ends, rotation }
}

/// Lengths of all face boundary walks.
fn trace_faces(g: &Embedded) -> Vec<Vec<usize>> {
    let darts = 2 * g.ends.len();
    let head = |d: usize| if d.is_multiple_of(2) { g.ends[d / 2].1 } else { g.ends[d / 2].0 };
    let mut pos = vec![0; darts];
    let mut tail = vec![0; darts];
    for (v, rot) in g.rotation.iter().enumerate() {
        for (k, &d) in rot.iter().enumerate() {
            pos[d] = k;
            tail[d] = v;
        }
    }
    let mut seen = vec![false; darts];
    let mut faces = Vec::new();
    for start in 0..darts {
        if seen[start] {
            continue;
        }
        let mut face = Vec::new();
        let mut d = start;
        while !seen[d] {
            seen[d] = true;
            face.push(d);
            let v = head(d);
            let back = d ^ 1;
            let rot = &g.rotation[v];
            d = rot[(pos[back] + rot.len() - 1) % rot.len()];
            debug_assert_eq!(tail[d], v);
        }
        faces.push(face);
    }
    faces
}

fn check(phi: &PhiString) -> Result<(), TestCaseError> {
    let n = phi.len();
    let g = embed(phi);
    let faces = trace_faces(&g);
    let edges = g.ends.len();
    prop_assert_eq!(n + 1 + faces.len(), edges + 2, "Euler formula fails for {}", phi);
    let rim_only = |f: &Vec<usize>| f.iter().all(|&d| d / 2 < n);
    let outer: Vec<_> = faces.iter().filter(|f| rim_only(f)).collect();
    prop_assert_eq!(outer.len(), 1);
    let mut traced: Vec<usize> = faces.iter().filter(|f| !rim_only(f)).map(|f| f.len()).collect();
    let mut computed = face_sizes(phi).unwrap().face_sizes;
    traced.sort_unstable();
    computed.sort_unstable();
    prop_assert_eq!(traced, computed, "faces of {}", phi);
    Ok(())
}

#[test]
fn small_examples() {
    for v in [vec![1, 1, 1, 1], vec![2, 0, 0], vec![1, 0, 1, 2, 0, 0, 1, 4, 0, 1, 1, 0, 3, 0, 0, 0]] {
        check(&PhiString::new(v).unwrap()).unwrap();
    }
}

#[test]
fn exhaustive_short_strings() {
    for phi in common::all_phis(6, 2) {
        if phi.len() >= 3 && phi.spokes() >= 1 {
            check(&phi).unwrap();
        }
    }
}

proptest! {
    #[test]
    fn random_strings(v in prop::collection::vec(0u32..=4, 3..=16)) {
        prop_assume!(v.iter().any(|&a| a > 0));
        check(&PhiString::new(v).unwrap())?;
    }
}
