//! Exact enumeration of the faces of a central hyperplane arrangement.
//!
//! For integer vectors `g_1, …, g_n ∈ ℤ^r` the sign vectors
//! `(sign⟨x, g_i⟩)_i` over all directions `x ≠ 0` are the covectors of the
//! oriented matroid of the configuration. Its cocircuits (the rays of the
//! arrangement, one per hyperplane of the matroid, with both orientations)
//! are computed in exact integer arithmetic, and every other covector is a
//! composition `C₁ ∘ C₂ ∘ ⋯` of cocircuits, where `(X ∘ Y)_i = X_i` if
//! `X_i ≠ 0` and `Y_i` otherwise. Geometrically `X ∘ Y` is the face hit by
//! `x + εy` for small `ε > 0`, so closing the cocircuit set under composition
//! visits every open cell and every lower-dimensional stratum exactly once.
//! When the vectors span less than `ℝ^r`, the all-zero sign vector is also
//! realized by a direction orthogonal to all of them.

use std::collections::BTreeMap;

use crate::error::{Error, Result};

/// One face of the arrangement.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Face {
    /// `sign⟨x, g_i⟩ ∈ {−1, 0, 1}` for each vector.
    pub signs: Vec<i8>,
    /// Cocircuit normals whose composition yields this face, outermost first.
    pub chain: Vec<usize>,
}

#[derive(Clone, Debug)]
pub struct Arrangement {
    pub rank: usize,
    pub ambient: usize,
    /// Integer normals realizing the cocircuits.
    pub normals: Vec<Vec<i128>>,
    /// Every face, sorted by sign vector.
    pub faces: Vec<Face>,
    /// Direction orthogonal to all vectors, present iff `rank < ambient`.
    pub null_direction: Option<Vec<i128>>,
}

fn overflow() -> Error {
    Error::capacity("integer overflow in exact arrangement arithmetic")
}

fn dot(a: &[i128], b: &[i128]) -> Result<i128> {
    a.iter().zip(b).try_fold(0i128, |acc, (x, y)| {
        x.checked_mul(*y).and_then(|p| acc.checked_add(p)).ok_or_else(overflow)
    })
}

/// Determinant by fraction-free (Bareiss) elimination.
pub(crate) fn determinant(mut m: Vec<Vec<i128>>) -> Result<i128> {
    let n = m.len();
    if n == 0 {
        return Ok(1);
    }
    let mut sign = 1i128;
    let mut prev = 1i128;
    for k in 0..n - 1 {
        if m[k][k] == 0 {
            match (k + 1..n).find(|&r| m[r][k] != 0) {
                Some(r) => {
                    m.swap(k, r);
                    sign = -sign;
                }
                None => return Ok(0),
            }
        }
        for i in k + 1..n {
            for j in k + 1..n {
                let a = m[i][j].checked_mul(m[k][k]).ok_or_else(overflow)?;
                let b = m[i][k].checked_mul(m[k][j]).ok_or_else(overflow)?;
                m[i][j] = a.checked_sub(b).ok_or_else(overflow)? / prev;
            }
        }
        prev = m[k][k];
    }
    Ok(sign * m[n - 1][n - 1])
}

fn gram(vectors: &[&[i128]]) -> Result<Vec<Vec<i128>>> {
    vectors
        .iter()
        .map(|a| vectors.iter().map(|b| dot(a, b)).collect())
        .collect()
}

fn independent(vectors: &[&[i128]]) -> Result<bool> {
    Ok(determinant(gram(vectors)?)? != 0)
}

/// The component of `extra` orthogonal to `span(basis)`, scaled to integers:
/// `y = Σ_j C_j b_j` over `b = basis ++ [extra]`, where `C_j` are the signed
/// minors of the Gram rows of `basis`. `⟨y, b_a⟩ = 0` for every basis vector
/// because it expands a determinant with a repeated row.
fn orthogonal_component(basis: &[&[i128]], extra: &[i128]) -> Result<Vec<i128>> {
    let mut all: Vec<&[i128]> = basis.to_vec();
    all.push(extra);
    let rows = basis.len();
    let cols = all.len();
    let g: Vec<Vec<i128>> = basis
        .iter()
        .map(|a| all.iter().map(|b| dot(a, b)).collect::<Result<Vec<_>>>())
        .collect::<Result<_>>()?;
    let dim = extra.len();
    let mut y = vec![0i128; dim];
    for (j, column) in all.iter().enumerate() {
        let minor: Vec<Vec<i128>> = (0..rows)
            .map(|r| (0..cols).filter(|&c| c != j).map(|c| g[r][c]).collect())
            .collect();
        let mut coeff = determinant(minor)?;
        if (rows + j) % 2 == 1 {
            coeff = -coeff;
        }
        for (t, yt) in y.iter_mut().enumerate() {
            let p = coeff.checked_mul(column[t]).ok_or_else(overflow)?;
            *yt = yt.checked_add(p).ok_or_else(overflow)?;
        }
    }
    Ok(reduce(y))
}

fn gcd(a: i128, b: i128) -> i128 {
    if b == 0 {
        a.abs()
    } else {
        gcd(b, a % b)
    }
}

fn reduce(v: Vec<i128>) -> Vec<i128> {
    let g = v.iter().fold(0i128, |acc, &x| gcd(acc, x));
    if g <= 1 {
        v
    } else {
        v.into_iter().map(|x| x / g).collect()
    }
}

/// Rank of a list of vectors, with a greedily chosen basis (indices).
fn greedy_basis(vectors: &[Vec<i128>]) -> Result<Vec<usize>> {
    let mut basis: Vec<usize> = Vec::new();
    for i in 0..vectors.len() {
        let mut trial: Vec<&[i128]> = basis.iter().map(|&b| vectors[b].as_slice()).collect();
        trial.push(&vectors[i]);
        if independent(&trial)? {
            basis.push(i);
        }
    }
    Ok(basis)
}

fn signs_of(normal: &[i128], vectors: &[Vec<i128>]) -> Result<Vec<i8>> {
    vectors.iter().map(|g| dot(normal, g).map(|v| v.signum() as i8)).collect()
}

fn for_each_subset(n: usize, size: usize, f: &mut dyn FnMut(&[usize]) -> Result<()>) -> Result<()> {
    fn rec(n: usize, size: usize, start: usize, cur: &mut Vec<usize>, f: &mut dyn FnMut(&[usize]) -> Result<()>) -> Result<()> {
        if cur.len() == size {
            return f(cur);
        }
        for v in start..n {
            if n - v < size - cur.len() {
                break;
            }
            cur.push(v);
            rec(n, size, v + 1, cur, f)?;
            cur.pop();
        }
        Ok(())
    }
    rec(n, size, 0, &mut Vec::with_capacity(size), f)
}

/// Enumerate every face of the arrangement `{g_i^⊥}` in `ℝ^ambient`.
pub fn enumerate_faces(vectors: &[Vec<i128>], ambient: usize) -> Result<Arrangement> {
    if vectors.iter().any(|g| g.len() != ambient) {
        return Err(Error::domain("vector length does not match the ambient dimension"));
    }
    let basis = greedy_basis(vectors)?;
    let rank = basis.len();

    // cocircuits: one per matroid hyperplane, i.e. per independent
    // (rank−1)-subset, extended by any vector outside its span
    let mut normals: Vec<Vec<i128>> = Vec::new();
    let mut cocircuits: BTreeMap<Vec<i8>, usize> = BTreeMap::new();
    if rank > 0 {
        for_each_subset(vectors.len(), rank - 1, &mut |subset| {
            let span: Vec<&[i128]> = subset.iter().map(|&i| vectors[i].as_slice()).collect();
            if !independent(&span)? {
                return Ok(());
            }
            let mut extended = span.clone();
            for &b in &basis {
                extended.push(&vectors[b]);
                let ok = independent(&extended)?;
                extended.pop();
                if ok {
                    let y = orthogonal_component(&span, &vectors[b])?;
                    let s = signs_of(&y, vectors)?;
                    if !cocircuits.contains_key(&s) {
                        let neg: Vec<i8> = s.iter().map(|x| -x).collect();
                        let neg_y: Vec<i128> = y.iter().map(|x| -x).collect();
                        normals.push(y);
                        cocircuits.insert(s, normals.len() - 1);
                        normals.push(neg_y);
                        cocircuits.insert(neg, normals.len() - 1);
                    }
                    break;
                }
            }
            Ok(())
        })?;
    }

    let mut faces: BTreeMap<Vec<i8>, Vec<usize>> = BTreeMap::new();
    let mut queue: Vec<Vec<i8>> = Vec::new();
    for (s, &c) in &cocircuits {
        faces.insert(s.clone(), vec![c]);
        queue.push(s.clone());
    }
    while let Some(x) = queue.pop() {
        let chain = faces[&x].clone();
        for (c_signs, &c) in &cocircuits {
            let composed: Vec<i8> = x
                .iter()
                .zip(c_signs)
                .map(|(&a, &b)| if a != 0 { a } else { b })
                .collect();
            if !faces.contains_key(&composed) {
                let mut next = chain.clone();
                next.push(c);
                faces.insert(composed.clone(), next);
                queue.push(composed);
            }
        }
    }

    let null_direction = if rank < ambient {
        let span: Vec<&[i128]> = basis.iter().map(|&b| vectors[b].as_slice()).collect();
        let mut found = None;
        for axis in 0..ambient {
            let mut e = vec![0i128; ambient];
            e[axis] = 1;
            let y = orthogonal_component(&span, &e)?;
            if y.iter().any(|&v| v != 0) {
                found = Some(y);
                break;
            }
        }
        let y = found.ok_or_else(|| Error::Invariant("no direction outside a proper subspace".into()))?;
        faces.insert(vec![0; vectors.len()], Vec::new());
        Some(y)
    } else {
        None
    };

    Ok(Arrangement {
        rank,
        ambient,
        normals,
        faces: faces.into_iter().map(|(signs, chain)| Face { signs, chain }).collect(),
        null_direction,
    })
}

impl Arrangement {
    /// A floating-point unit direction lying in `face`.
    pub fn representative(&self, face: &Face, vectors: &[Vec<i128>]) -> Vec<f64> {
        let to_f = |v: &[i128]| v.iter().map(|&x| x as f64).collect::<Vec<f64>>();
        let mut dir = match face.chain.first() {
            Some(&c) => to_f(&self.normals[c]),
            None => to_f(self.null_direction.as_deref().unwrap_or(&[])),
        };
        let fvecs: Vec<Vec<f64>> = vectors.iter().map(|g| to_f(g)).collect();
        let fdot = |a: &[f64], b: &[f64]| a.iter().zip(b).map(|(x, y)| x * y).sum::<f64>();
        // exact sign pattern reached so far along the chain
        let mut known: Vec<i8> = match face.chain.first() {
            Some(&c) => signs_of(&self.normals[c], vectors).unwrap_or_default(),
            None => vec![0; vectors.len()],
        };
        for &c in face.chain.iter().skip(1) {
            let y = to_f(&self.normals[c]);
            let slack = fvecs
                .iter()
                .zip(&known)
                .filter(|(_, &k)| k != 0)
                .fold(f64::INFINITY, |m, (g, _)| m.min(fdot(&dir, g).abs()));
            let push = fvecs.iter().map(|g| fdot(&y, g).abs()).fold(0.0f64, f64::max);
            let eps = if push > 0.0 && slack.is_finite() { 0.5 * slack / push } else { 1.0 };
            for (d, yv) in dir.iter_mut().zip(&y) {
                *d += eps * yv;
            }
            if let Ok(next) = signs_of(&self.normals[c], vectors) {
                for (k, n) in known.iter_mut().zip(next) {
                    if *k == 0 {
                        *k = n;
                    }
                }
            }
        }
        let norm = fdot(&dir, &dir).sqrt();
        if norm > 0.0 {
            dir.iter_mut().for_each(|d| *d /= norm);
        }
        dir
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn vecs(rows: &[&[i128]]) -> Vec<Vec<i128>> {
        rows.iter().map(|r| r.to_vec()).collect()
    }

    #[test]
    fn determinants() {
        assert_eq!(determinant(vec![]).unwrap(), 1);
        assert_eq!(determinant(vec![vec![3]]).unwrap(), 3);
        assert_eq!(determinant(vec![vec![1, 2], vec![3, 4]]).unwrap(), -2);
        assert_eq!(determinant(vec![vec![0, 1, 0], vec![1, 0, 0], vec![0, 0, 1]]).unwrap(), -1);
        assert_eq!(determinant(vec![vec![2, 0, 1], vec![1, 3, 2], vec![1, 1, 1]]).unwrap(), 0);
        // Vandermonde on 1,2,3,4 is Π(j−i) = 12
        let v: Vec<Vec<i128>> = (1..=4).map(|t: i128| (0..4).map(|p| t.pow(p)).collect()).collect();
        assert_eq!(determinant(v).unwrap(), 12);
    }

    #[test]
    fn lines_in_the_plane() {
        // three generic lines through the origin: 6 rays, 6 sectors
        let g = vecs(&[&[1, 0], &[0, 1], &[1, 1]]);
        let arr = enumerate_faces(&g, 2).unwrap();
        assert_eq!(arr.rank, 2);
        assert_eq!(arr.faces.len(), 12);
        assert!(arr.null_direction.is_none());
        for f in &arr.faces {
            let x = arr.representative(f, &g);
            for (gi, &s) in g.iter().zip(&f.signs) {
                let v: f64 = x.iter().zip(gi).map(|(a, b)| a * *b as f64).sum();
                if s == 0 {
                    assert!(v.abs() < 1e-9);
                } else {
                    assert_eq!(v.signum() as i8, s, "{f:?}");
                }
            }
        }
    }

    #[test]
    fn generic_planes_in_space() {
        // 4 generic planes through the origin of ℝ³ cut the sphere into
        // 14 regions, 24 arcs and 12 vertices
        let g = vecs(&[&[1, 0, 0], &[0, 1, 0], &[0, 0, 1], &[1, 1, 1]]);
        let arr = enumerate_faces(&g, 3).unwrap();
        let by_zeros = |z: usize| arr.faces.iter().filter(|f| f.signs.iter().filter(|&&s| s == 0).count() == z).count();
        assert_eq!(by_zeros(0), 14);
        assert_eq!(by_zeros(1), 24);
        assert_eq!(by_zeros(2), 12);
    }

    #[test]
    fn rank_deficient_configuration() {
        let g = vecs(&[&[1, 1, 0], &[2, 2, 0], &[-1, -1, 0]]);
        let arr = enumerate_faces(&g, 3).unwrap();
        assert_eq!(arr.rank, 1);
        let signs: Vec<Vec<i8>> = arr.faces.iter().map(|f| f.signs.clone()).collect();
        assert_eq!(signs, vec![vec![-1, -1, 1], vec![0, 0, 0], vec![1, 1, -1]]);
        let y = arr.null_direction.unwrap();
        assert!(g.iter().all(|gi| dot(&y, gi).unwrap() == 0));
    }
}
