//! Free commutative algebra on connected graphs, with exact rational
//! coefficients, and its tensor powers.

use std::collections::BTreeMap;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};
use serde::{Deserialize, Serialize};

use crate::canon::{component_keys, CanonicalKey};
use crate::error::{Error, Result};
use crate::graph::OrientedGraph;

pub type Rational = BigRational;

pub fn rational(n: i64) -> Rational {
    Rational::from_integer(BigInt::from(n))
}

/// Bialgebra mode keeps residue factors; Hopf mode identifies every graph
/// without internal edges with the unit.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum Mode {
    Bialgebra,
    Hopf,
}

pub const MAX_ARITY: usize = 4;

/// A product of connected nonempty graphs, stored as their sorted keys.
/// The empty product is the unit.
#[derive(Clone, Debug, Default, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Monomial(Vec<CanonicalKey>);

impl Monomial {
    pub fn unit() -> Self {
        Monomial(Vec::new())
    }

    pub fn from_factors(mut factors: Vec<CanonicalKey>) -> Self {
        factors.retain(|k| !k.is_empty_graph());
        factors.sort();
        Monomial(factors)
    }

    pub fn from_graph(g: &OrientedGraph, mode: Mode) -> Self {
        let m = Monomial(component_keys(g));
        match mode {
            Mode::Bialgebra => m,
            Mode::Hopf => m.project_hopf(),
        }
    }

    pub fn factors(&self) -> &[CanonicalKey] {
        &self.0
    }

    pub fn is_unit(&self) -> bool {
        self.0.is_empty()
    }

    /// Drops the factors without internal edges.
    pub fn project_hopf(&self) -> Self {
        Monomial(self.0.iter().filter(|k| k.internal_count() > 0).cloned().collect())
    }

    pub fn is_residue(&self) -> bool {
        self.0.iter().all(|k| k.internal_count() == 0)
    }

    pub fn mul(&self, other: &Monomial) -> Monomial {
        let mut f = Vec::with_capacity(self.0.len() + other.0.len());
        let (mut i, mut j) = (0, 0);
        while i < self.0.len() && j < other.0.len() {
            if self.0[i] <= other.0[j] {
                f.push(self.0[i].clone());
                i += 1;
            } else {
                f.push(other.0[j].clone());
                j += 1;
            }
        }
        f.extend_from_slice(&self.0[i..]);
        f.extend_from_slice(&other.0[j..]);
        Monomial(f)
    }

    /// The disjoint union of the factors' canonical representatives.
    pub fn to_graph(&self) -> OrientedGraph {
        self.0
            .iter()
            .fold(OrientedGraph::empty(), |acc, k| acc.disjoint_union(&k.to_graph()))
    }
}

/// A finite linear combination with no zero coefficients stored.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Combination<B: Ord> {
    terms: BTreeMap<B, Rational>,
}

impl<B: Ord> Default for Combination<B> {
    fn default() -> Self {
        Combination {
            terms: BTreeMap::new(),
        }
    }
}

impl<B: Ord + Clone> Combination<B> {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn single(b: B, c: Rational) -> Self {
        let mut out = Self::zero();
        out.add_term(b, c);
        out
    }

    pub fn add_term(&mut self, b: B, c: Rational) {
        if c.is_zero() {
            return;
        }
        match self.terms.entry(b) {
            std::collections::btree_map::Entry::Vacant(e) => {
                e.insert(c);
            }
            std::collections::btree_map::Entry::Occupied(mut e) => {
                *e.get_mut() += c;
                if e.get().is_zero() {
                    e.remove();
                }
            }
        }
    }

    pub fn add_scaled(&mut self, other: &Self, c: &Rational) {
        for (b, x) in &other.terms {
            self.add_term(b.clone(), x * c);
        }
    }

    pub fn scale(&self, c: &Rational) -> Self {
        if c.is_zero() {
            return Self::zero();
        }
        Combination {
            terms: self.terms.iter().map(|(b, x)| (b.clone(), x * c)).collect(),
        }
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn coefficient(&self, b: &B) -> Rational {
        self.terms.get(b).cloned().unwrap_or_else(Rational::zero)
    }

    pub fn iter(&self) -> impl Iterator<Item = (&B, &Rational)> {
        self.terms.iter()
    }

    pub fn has_zero_coefficient(&self) -> bool {
        self.terms.values().any(|c| c.is_zero())
    }
}

impl<B: Ord + Clone> Add for &Combination<B> {
    type Output = Combination<B>;
    fn add(self, rhs: Self) -> Combination<B> {
        let mut out = self.clone();
        out.add_scaled(rhs, &Rational::one());
        out
    }
}

impl<B: Ord + Clone> Sub for &Combination<B> {
    type Output = Combination<B>;
    fn sub(self, rhs: Self) -> Combination<B> {
        let mut out = self.clone();
        out.add_scaled(rhs, &-Rational::one());
        out
    }
}

impl<B: Ord + Clone> Neg for &Combination<B> {
    type Output = Combination<B>;
    fn neg(self) -> Combination<B> {
        self.scale(&-Rational::one())
    }
}

/// An element of the commutative graph algebra.
pub type AlgebraElement = Combination<Monomial>;

impl AlgebraElement {
    pub fn one() -> Self {
        Self::monomial(Monomial::unit())
    }

    pub fn monomial(m: Monomial) -> Self {
        Self::single(m, Rational::one())
    }

    /// The graph as an algebra element: the product of its components (Hopf
    /// mode drops those without internal edges).
    pub fn from_graph(g: &OrientedGraph, mode: Mode) -> Self {
        Self::monomial(Monomial::from_graph(g, mode))
    }

    pub fn multiply(&self, other: &Self) -> Self {
        let mut out = Self::zero();
        for (a, x) in self.iter() {
            for (b, y) in other.iter() {
                out.add_term(a.mul(b), x * y);
            }
        }
        out
    }

    /// Linear extension of `f` on monomials.
    pub fn map_linear<E>(&self, mut f: impl FnMut(&Monomial) -> Result<AlgebraElement, E>) -> Result<Self, E> {
        let mut out = Self::zero();
        for (m, c) in self.iter() {
            out.add_scaled(&f(m)?, c);
        }
        Ok(out)
    }

    pub fn project_hopf(&self) -> Self {
        let mut out = Self::zero();
        for (m, c) in self.iter() {
            out.add_term(m.project_hopf(), c.clone());
        }
        out
    }
}

impl Mul for &AlgebraElement {
    type Output = AlgebraElement;
    fn mul(self, rhs: Self) -> AlgebraElement {
        self.multiply(rhs)
    }
}

/// A combination of `arity`-tuples of monomials.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Tensor {
    arity: usize,
    terms: Combination<Vec<Monomial>>,
}

impl Tensor {
    pub fn zero(arity: usize) -> Result<Self> {
        if arity == 0 || arity > MAX_ARITY {
            return Err(Error::ArityOutOfRange(arity));
        }
        Ok(Tensor {
            arity,
            terms: Combination::zero(),
        })
    }

    /// `1 ⊗ … ⊗ 1`.
    pub fn unit(arity: usize) -> Result<Self> {
        let mut t = Self::zero(arity)?;
        t.add_term(vec![Monomial::unit(); arity], Rational::one());
        Ok(t)
    }

    pub fn from_slots(slots: Vec<Monomial>) -> Result<Self> {
        let mut t = Self::zero(slots.len())?;
        t.add_term(slots, Rational::one());
        Ok(t)
    }

    pub fn from_element(x: &AlgebraElement) -> Self {
        let mut t = Tensor {
            arity: 1,
            terms: Combination::zero(),
        };
        for (m, c) in x.iter() {
            t.terms.add_term(vec![m.clone()], c.clone());
        }
        t
    }

    /// Reads an arity-1 tensor as an algebra element.
    pub fn into_element(self) -> Result<AlgebraElement> {
        if self.arity != 1 {
            return Err(Error::ArityOutOfRange(self.arity));
        }
        let mut out = AlgebraElement::zero();
        for (slots, c) in self.terms.iter() {
            out.add_term(slots[0].clone(), c.clone());
        }
        Ok(out)
    }

    pub fn arity(&self) -> usize {
        self.arity
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_zero()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&[Monomial], &Rational)> {
        self.terms.iter().map(|(s, c)| (s.as_slice(), c))
    }

    pub fn coefficient(&self, slots: &[Monomial]) -> Rational {
        self.terms.coefficient(&slots.to_vec())
    }

    pub fn has_zero_coefficient(&self) -> bool {
        self.terms.has_zero_coefficient()
    }

    /// Panics if `slots.len()` differs from the arity.
    pub fn add_term(&mut self, slots: Vec<Monomial>, c: Rational) {
        assert_eq!(slots.len(), self.arity, "tensor arity mismatch");
        self.terms.add_term(slots, c);
    }

    pub fn add_scaled(&mut self, other: &Tensor, c: &Rational) -> Result<()> {
        if other.arity != self.arity {
            return Err(Error::ArityOutOfRange(other.arity));
        }
        self.terms.add_scaled(&other.terms, c);
        Ok(())
    }

    pub fn scale(&self, c: &Rational) -> Tensor {
        Tensor {
            arity: self.arity,
            terms: self.terms.scale(c),
        }
    }

    /// Slotwise product `(a ⊗ b)(c ⊗ d) = ac ⊗ bd`.
    pub fn multiply(&self, other: &Tensor) -> Result<Tensor> {
        if other.arity != self.arity {
            return Err(Error::ArityOutOfRange(other.arity));
        }
        let mut out = Tensor::zero(self.arity)?;
        for (a, x) in self.terms.iter() {
            for (b, y) in other.terms.iter() {
                let slots = a.iter().zip(b).map(|(p, q)| p.mul(q)).collect();
                out.terms.add_term(slots, x * y);
            }
        }
        Ok(out)
    }

    /// Applies a linear map `A → A` in one slot.
    pub fn map_slot<E: From<Error>>(
        &self,
        slot: usize,
        mut f: impl FnMut(&Monomial) -> Result<AlgebraElement, E>,
    ) -> Result<Tensor, E> {
        if slot >= self.arity {
            return Err(Error::ArityOutOfRange(slot + 1).into());
        }
        let mut out = Tensor::zero(self.arity)?;
        for (slots, c) in self.terms.iter() {
            for (m, d) in f(&slots[slot])?.iter() {
                let mut s = slots.clone();
                s[slot] = m.clone();
                out.terms.add_term(s, c * d);
            }
        }
        Ok(out)
    }

    /// Applies a linear map `A → A ⊗ A` in one slot, splicing its result into
    /// two adjacent slots.
    pub fn expand_slot<E: From<Error>>(
        &self,
        slot: usize,
        mut f: impl FnMut(&Monomial) -> Result<Tensor, E>,
    ) -> Result<Tensor, E> {
        if slot >= self.arity {
            return Err(Error::ArityOutOfRange(slot + 1).into());
        }
        let mut out = Tensor::zero(self.arity + 1)?;
        for (slots, c) in self.terms.iter() {
            let image = f(&slots[slot])?;
            if image.arity != 2 {
                return Err(Error::ArityOutOfRange(image.arity).into());
            }
            for (pair, d) in image.terms.iter() {
                let mut s = Vec::with_capacity(self.arity + 1);
                s.extend_from_slice(&slots[..slot]);
                s.extend_from_slice(pair);
                s.extend_from_slice(&slots[slot + 1..]);
                out.terms.add_term(s, c * d);
            }
        }
        Ok(out)
    }

    /// Applies a linear functional in one slot, removing it.
    pub fn contract_slot(&self, slot: usize, mut f: impl FnMut(&Monomial) -> Rational) -> Result<Tensor> {
        if slot >= self.arity || self.arity < 2 {
            return Err(Error::ArityOutOfRange(self.arity));
        }
        let mut out = Tensor::zero(self.arity - 1)?;
        for (slots, c) in self.terms.iter() {
            let k = f(&slots[slot]);
            if k.is_zero() {
                continue;
            }
            let mut s = slots.clone();
            s.remove(slot);
            out.terms.add_term(s, c * k);
        }
        Ok(out)
    }

    /// Multiplies the selected slots together into one slot placed at the
    /// position of the first; the remaining slots keep their order.
    pub fn merge_slots(&self, first: usize, second: usize) -> Result<Tensor> {
        if first >= second || second >= self.arity {
            return Err(Error::ArityOutOfRange(self.arity));
        }
        let mut out = Tensor::zero(self.arity - 1)?;
        for (slots, c) in self.terms.iter() {
            let mut s = slots.clone();
            let b = s.remove(second);
            s[first] = s[first].mul(&b);
            out.terms.add_term(s, c.clone());
        }
        Ok(out)
    }

    /// Reorders slots: slot `i` of the result is slot `order[i]` of `self`.
    pub fn permute(&self, order: &[usize]) -> Result<Tensor> {
        if order.len() != self.arity {
            return Err(Error::ArityOutOfRange(order.len()));
        }
        let mut out = Tensor::zero(self.arity)?;
        for (slots, c) in self.terms.iter() {
            out.terms
                .add_term(order.iter().map(|&i| slots[i].clone()).collect(), c.clone());
        }
        Ok(out)
    }

    /// Applies `f` to every monomial of every slot (used for the Hopf projection).
    pub fn map_monomials(&self, f: impl Fn(&Monomial) -> Monomial) -> Tensor {
        let mut out = Tensor {
            arity: self.arity,
            terms: Combination::zero(),
        };
        for (slots, c) in self.terms.iter() {
            out.terms.add_term(slots.iter().map(&f).collect(), c.clone());
        }
        out
    }
}

/// The tensor product of 2 to 4 elements, distributed over their sums.
pub fn tensor_combine(factors: &[AlgebraElement]) -> Result<Tensor> {
    if factors.len() < 2 || factors.len() > MAX_ARITY {
        return Err(Error::ArityOutOfRange(factors.len()));
    }
    let mut acc: Vec<(Vec<Monomial>, Rational)> = vec![(Vec::new(), Rational::one())];
    for x in factors {
        let mut next = Vec::with_capacity(acc.len() * x.len());
        for (slots, c) in &acc {
            for (m, d) in x.iter() {
                let mut s = slots.clone();
                s.push(m.clone());
                next.push((s, c * d));
            }
        }
        acc = next;
    }
    let mut out = Tensor::zero(factors.len())?;
    for (s, c) in acc {
        out.add_term(s, c);
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::GraphBuilder;

    fn triangle() -> OrientedGraph {
        GraphBuilder::with_vertices(3).edge(0, 1).edge(1, 2).edge(0, 2).build()
    }

    fn el(g: &OrientedGraph) -> AlgebraElement {
        AlgebraElement::from_graph(g, Mode::Bialgebra)
    }

    #[test]
    fn from_graph_modes() {
        let empty = OrientedGraph::empty();
        assert_eq!(AlgebraElement::from_graph(&empty, Mode::Bialgebra), AlgebraElement::one());
        assert_eq!(AlgebraElement::from_graph(&empty, Mode::Hopf), AlgebraElement::one());
        let r = GraphBuilder::with_vertices(1).leg_in(0).leg_out(0).build();
        assert_eq!(AlgebraElement::from_graph(&r, Mode::Hopf), AlgebraElement::one());
        let m = Monomial::from_graph(&r, Mode::Bialgebra);
        assert_eq!(m.factors().len(), 1);
        assert!(m.is_residue());
    }

    #[test]
    fn products() {
        let t = el(&triangle());
        assert_eq!(AlgebraElement::one().multiply(&t), t);
        let tt = t.multiply(&t);
        let (m, c) = tt.iter().next().unwrap();
        assert_eq!(m.factors().len(), 2);
        assert_eq!(m.factors()[0], m.factors()[1]);
        assert_eq!(*c, rational(1));
        assert!((&t + &t.scale(&rational(-1))).is_zero());
    }

    #[test]
    fn tensor_combination() {
        let a = el(&triangle());
        let b = el(&GraphBuilder::with_vertices(2).edge(0, 1).build());
        let c = el(&GraphBuilder::with_vertices(1).build());
        let t = tensor_combine(&[a.clone(), AlgebraElement::one()]).unwrap();
        assert_eq!(t.len(), 1);
        let sum = tensor_combine(&[&a + &b, c.clone()]).unwrap();
        let expect = {
            let mut x = tensor_combine(&[a.clone(), c.clone()]).unwrap();
            x.add_scaled(&tensor_combine(&[b.clone(), c.clone()]).unwrap(), &rational(1)).unwrap();
            x
        };
        assert_eq!(sum, expect);
        let scaled = tensor_combine(&[a.scale(&rational(2)), b.scale(&rational(3))]).unwrap();
        assert_eq!(scaled, tensor_combine(&[a.clone(), b.clone()]).unwrap().scale(&rational(6)));
        assert!(matches!(tensor_combine(std::slice::from_ref(&a)), Err(Error::ArityOutOfRange(1))));
        assert!(matches!(
            tensor_combine(&[a.clone(), a.clone(), a.clone(), a.clone(), a]),
            Err(Error::ArityOutOfRange(5))
        ));
    }

    #[test]
    fn slotwise_maps() {
        let x = el(&triangle());
        let y = el(&GraphBuilder::with_vertices(2).edge(0, 1).build());
        let xy = tensor_combine(&[x.clone(), y.clone()]).unwrap();
        let same = xy
            .map_slot(0, |m| Ok::<_, Error>(AlgebraElement::monomial(m.clone())))
            .unwrap();
        assert_eq!(same, xy);
        let eps = |m: &Monomial| if m.is_unit() { rational(1) } else { rational(0) };
        assert!(xy.contract_slot(0, eps).unwrap().is_zero());
        let yx1 = tensor_combine(&[AlgebraElement::one(), y.clone()]).unwrap();
        assert_eq!(yx1.contract_slot(0, eps).unwrap().into_element().unwrap(), y);
        let expanded = xy
            .expand_slot(1, |m| Tensor::from_slots(vec![m.clone(), Monomial::unit()]))
            .unwrap();
        assert_eq!(expanded.arity(), 3);
        assert!(matches!(xy.map_slot(2, |_| Ok::<_, Error>(AlgebraElement::one())), Err(Error::ArityOutOfRange(_))));
    }

    #[test]
    fn equality_is_order_sensitive_and_normalized() {
        let x = el(&triangle());
        let y = el(&GraphBuilder::with_vertices(2).edge(0, 1).build());
        let a = tensor_combine(&[x.clone(), y.clone()]).unwrap();
        let b = tensor_combine(&[y.clone(), x.clone()]).unwrap();
        assert_ne!(a, b);
        assert_eq!(&(&x + &y) - &y, x);
    }
}
