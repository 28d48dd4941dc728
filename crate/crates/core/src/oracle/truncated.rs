//! The algebra truncated at a degree bound, with an explicit basis and
//! multiplication table.

use std::collections::{BTreeMap, HashMap};

use num_rational::BigRational;
use num_traits::{One, Zero};

use crate::quiver::{ArrowId, GentlePresentation, Path, VertexId};

/// A homogeneous or inhomogeneous element: global basis index to coefficient.
pub type Element = BTreeMap<usize, BigRational>;

/// `A_{<=N}` materialized as basis paths per degree and a product table.
#[derive(Clone, Debug)]
pub struct TruncatedAlgebra {
    pres: GentlePresentation,
    bound: usize,
    basis: Vec<Vec<Path>>,
    offsets: Vec<usize>,
    paths: Vec<Path>,
    index: HashMap<Path, usize>,
    table: Vec<Vec<Option<usize>>>,
}

/// Materializes the degree `<= bound` part of the algebra.
pub fn truncate(pres: &GentlePresentation, bound: usize) -> TruncatedAlgebra {
    let basis: Vec<Vec<Path>> = (0..=bound).map(|n| pres.path_basis(n)).collect();
    let mut offsets = Vec::with_capacity(basis.len());
    let mut paths = Vec::new();
    for layer in &basis {
        offsets.push(paths.len());
        paths.extend(layer.iter().cloned());
    }
    let index: HashMap<Path, usize> = paths.iter().cloned().enumerate().map(|(i, p)| (p, i)).collect();
    let table = paths
        .iter()
        .map(|p| {
            paths
                .iter()
                .map(|q| {
                    if p.len() + q.len() > bound {
                        return None;
                    }
                    pres.multiply(p, q).map(|r| index[&r])
                })
                .collect()
        })
        .collect();
    TruncatedAlgebra { pres: pres.clone(), bound, basis, offsets, paths, index, table }
}

impl TruncatedAlgebra {
    pub fn presentation(&self) -> &GentlePresentation {
        &self.pres
    }

    pub fn bound(&self) -> usize {
        self.bound
    }

    pub fn dims(&self) -> Vec<usize> {
        self.basis.iter().map(Vec::len).collect()
    }

    pub fn dim(&self, n: usize) -> usize {
        self.basis.get(n).map_or(0, Vec::len)
    }

    /// Basis paths of degree `n`; empty beyond the bound.
    pub fn basis(&self, n: usize) -> &[Path] {
        self.basis.get(n).map_or(&[], Vec::as_slice)
    }

    pub fn len(&self) -> usize {
        self.paths.len()
    }

    pub fn is_empty(&self) -> bool {
        self.paths.is_empty()
    }

    pub fn path(&self, i: usize) -> &Path {
        &self.paths[i]
    }

    pub fn degree(&self, i: usize) -> usize {
        self.paths[i].len()
    }

    pub fn index_of(&self, p: &Path) -> Option<usize> {
        self.index.get(p).copied()
    }

    /// Position of `p` inside `basis(len(p))`.
    pub fn local_index(&self, p: &Path) -> Option<usize> {
        self.index_of(p).map(|i| i - self.offsets[p.len()])
    }

    /// Product of two basis elements by global index; `None` when it vanishes
    /// or leaves the truncation.
    pub fn product(&self, i: usize, j: usize) -> Option<usize> {
        self.table[i][j]
    }

    pub fn element(&self, p: &Path) -> Element {
        let mut e = Element::new();
        e.insert(self.index[p], BigRational::one());
        e
    }

    pub fn vertex(&self, v: VertexId) -> Element {
        self.element(&Path::stationary(v))
    }

    pub fn arrow(&self, a: ArrowId) -> Element {
        self.element(&Path::arrow(self.pres.quiver(), a))
    }

    pub fn one(&self) -> Element {
        self.pres.quiver().vertices().flat_map(|v| self.vertex(v)).collect()
    }

    pub fn sum_of_arrows(&self) -> Element {
        self.pres.quiver().arrow_ids().flat_map(|a| self.arrow(a)).collect()
    }

    /// Sum of the given basis paths, each with coefficient 1.
    pub fn sum_of_paths<'a>(&self, paths: impl IntoIterator<Item = &'a Path>) -> Element {
        let mut e = Element::new();
        for p in paths {
            add_term(&mut e, self.index[p], &BigRational::one());
        }
        e
    }

    /// Product of two elements; terms leaving the truncation are dropped.
    pub fn mul(&self, x: &Element, y: &Element) -> Element {
        let mut out = Element::new();
        for (&i, a) in x {
            for (&j, b) in y {
                if let Some(k) = self.table[i][j] {
                    add_term(&mut out, k, &(a * b));
                }
            }
        }
        out
    }

    pub fn sub(&self, x: &Element, y: &Element) -> Element {
        let mut out = x.clone();
        for (&k, b) in y {
            add_term(&mut out, k, &-b.clone());
        }
        out
    }

    pub fn scale(&self, x: &Element, c: &BigRational) -> Element {
        if c.is_zero() {
            return Element::new();
        }
        x.iter().map(|(&k, v)| (k, v * c)).collect()
    }

    pub fn pow(&self, x: &Element, m: usize) -> Element {
        let mut out = self.one();
        for _ in 0..m {
            out = self.mul(&out, x);
        }
        out
    }

    /// Degree-`n` component as a dense vector over `basis(n)`.
    pub fn component(&self, x: &Element, n: usize) -> Vec<BigRational> {
        let mut v = vec![BigRational::zero(); self.dim(n)];
        if n > self.bound {
            return v;
        }
        for (&k, c) in x {
            if self.paths[k].len() == n {
                v[k - self.offsets[n]] = c.clone();
            }
        }
        v
    }

    /// Largest degree appearing in `x`, if nonzero.
    pub fn top_degree(&self, x: &Element) -> Option<usize> {
        x.keys().map(|&k| self.paths[k].len()).max()
    }
}

pub fn add_term(e: &mut Element, k: usize, c: &BigRational) {
    let slot = e.entry(k).or_insert_with(BigRational::zero);
    *slot += c;
    if slot.is_zero() {
        e.remove(&k);
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::catalog;

    #[test]
    fn dims_match_examples() {
        assert_eq!(truncate(&catalog::hilb(), 5).dims(), vec![5, 5, 2, 1, 1, 1]);
        assert_eq!(truncate(&catalog::kronecker(), 3).dims(), vec![2, 2, 0, 0]);
        assert_eq!(truncate(&catalog::a_tilde(2), 4).dims(), vec![3, 3, 3, 3, 3]);
    }

    #[test]
    fn associativity() {
        for pres in [catalog::hilb(), catalog::two_loops(), catalog::chain_loops()] {
            let t = truncate(&pres, 6);
            for i in 0..t.len() {
                for j in 0..t.len() {
                    for k in 0..t.len() {
                        if t.degree(i) + t.degree(j) + t.degree(k) > 6 {
                            continue;
                        }
                        let left = t.product(i, j).and_then(|ij| t.product(ij, k));
                        let right = t.product(j, k).and_then(|jk| t.product(i, jk));
                        assert_eq!(left, right);
                    }
                }
            }
        }
    }

    #[test]
    fn unit_acts_trivially() {
        let t = truncate(&catalog::chain_loops(), 4);
        let x = t.sum_of_arrows();
        assert_eq!(t.mul(&t.one(), &x), x);
        assert_eq!(t.mul(&x, &t.one()), x);
    }
}
