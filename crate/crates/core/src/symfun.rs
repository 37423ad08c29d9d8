//! Symmetric-function machinery over finite index sets.
//!
//! For a finite set `s` of positive integers and a shift `d`, the product
//! `prod_shift(s, d) = prod over k in s of (d + k)` expands as
//!
//! ```text
//! prod_shift(s, d) = prod_over(s) + d * e1(s) + d^2 * e2(s) + d^3 * T
//! ```
//!
//! where `e1` sums the products with one index erased, `e2` sums the
//! products with two indices erased, and `T` is an integer. This module
//! computes the truncations of that expansion and extracts the integer
//! witnesses `R` (first order, `R = e2 + d*T`) and `T` (second order),
//! both by exact division and by the structural recursion
//! `T({a} ∪ s) = e2(s) + a*T0 + d*T0`.
//!
//! On the canonical set `{1, ..., p-1}` with `d = p`, `e1` is the integer
//! harmonic sum `S1` and these witnesses drive the certificate stages.

use num_bigint::{BigInt, BigUint};
use num_traits::{One, Zero};
use thiserror::Error;

use crate::exact::exact_div;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum SymfunError {
    #[error("shift d = 0 admits every integer as a witness")]
    ZeroShift,
    #[error("element {0} is already in the set")]
    ElementPresent(u64),
}

/// A finite set of distinct positive integers, stored in ascending order.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct IndexSet {
    elements: Vec<u64>,
}

impl IndexSet {
    /// Builds a set from arbitrary input, sorting and deduplicating.
    ///
    /// Panics if any element is zero; members must be positive.
    pub fn new(elements: impl IntoIterator<Item = u64>) -> Self {
        let mut elements: Vec<u64> = elements.into_iter().collect();
        elements.sort_unstable();
        elements.dedup();
        assert!(
            elements.first() != Some(&0),
            "IndexSet elements must be positive"
        );
        IndexSet { elements }
    }

    /// The canonical set {1, ..., n}; empty when n = 0.
    pub fn range_1_to(n: u64) -> Self {
        IndexSet {
            elements: (1..=n).collect(),
        }
    }

    pub fn elements(&self) -> &[u64] {
        &self.elements
    }

    pub fn len(&self) -> usize {
        self.elements.len()
    }

    pub fn is_empty(&self) -> bool {
        self.elements.is_empty()
    }

    pub fn contains(&self, a: u64) -> bool {
        self.elements.binary_search(&a).is_ok()
    }

    /// The set with `a` adjoined; `a` must not already be present.
    pub fn cons(&self, a: u64) -> Result<Self, SymfunError> {
        if self.contains(a) {
            return Err(SymfunError::ElementPresent(a));
        }
        let mut elements = self.elements.clone();
        elements.push(a);
        elements.sort_unstable();
        Ok(IndexSet { elements })
    }
}

/// Product of all elements; 1 for the empty set.
pub fn prod_over(s: &IndexSet) -> BigUint {
    let mut acc = BigUint::one();
    for &k in s.elements() {
        acc *= k;
    }
    acc
}

/// Shifted product over k in s of (d + k); 1 for the empty set.
pub fn prod_shift(s: &IndexSet, d: &BigInt) -> BigInt {
    let mut acc = BigInt::one();
    for &k in s.elements() {
        acc *= d + k;
    }
    acc
}

/// Sum over j in s of the product of the other elements.
///
/// Empty set gives 0; a singleton gives 1 (the empty erased product).
pub fn e1(s: &IndexSet) -> BigUint {
    let mut acc = BigUint::zero();
    for &j in s.elements() {
        let mut term = BigUint::one();
        for &k in s.elements() {
            if k != j {
                term *= k;
            }
        }
        acc += term;
    }
    acc
}

/// Second elementary symmetric product: sum over pairs i < j of the
/// product of the remaining elements. Sets of size < 2 give 0.
pub fn e2(s: &IndexSet) -> BigUint {
    let elems = s.elements();
    let mut acc = BigUint::zero();
    for (a, &i) in elems.iter().enumerate() {
        for &j in &elems[a + 1..] {
            let mut term = BigUint::one();
            for &k in elems {
                if k != i && k != j {
                    term *= k;
                }
            }
            acc += term;
        }
    }
    acc
}

/// Checks the e2 recurrence e2({a} ∪ s) = e1(s) + a * e2(s).
///
/// This holds for every a outside s; the function exists as an executable
/// oracle for that identity and must always return true.
pub fn e2_cons_check(a: u64, s: &IndexSet) -> Result<bool, SymfunError> {
    let extended = s.cons(a)?;
    Ok(e2(&extended) == e1(s) + e2(s) * a)
}

/// First-order expansion data: prod_shift - prod_over = d*e1 + d^2*R.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FirstOrderExpansion {
    pub e1: BigUint,
    pub r: BigInt,
    pub shift: BigInt,
}

/// Full second-order expansion witness for a given (s, d).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ExpansionWitness {
    pub e1: BigUint,
    pub r: BigInt,
    pub e2: BigUint,
    pub t: BigInt,
    pub shift: BigInt,
}

impl ExpansionWitness {
    /// Re-derives all three defining identities against the set itself.
    pub fn holds_for(&self, s: &IndexSet) -> bool {
        let shifted = prod_shift(s, &self.shift);
        let base = BigInt::from(prod_over(s));
        let e1 = BigInt::from(self.e1.clone());
        let e2 = BigInt::from(self.e2.clone());
        let d = &self.shift;
        let first = &shifted - &base == d * &e1 + d * d * &self.r;
        let second =
            &shifted - &base - d * &e1 == d * d * &e2 + d * d * d * &self.t;
        let bridge = self.r == &e2 + d * &self.t;
        first && second && bridge
    }
}

/// Extracts R with prod_shift - prod_over - d*e1 = d^2 * R.
///
/// The division is exact for every finite set and nonzero d; d = 0 is
/// rejected because the identity then holds for every integer R.
pub fn first_order_remainder(
    s: &IndexSet,
    d: &BigInt,
) -> Result<FirstOrderExpansion, SymfunError> {
    if d.is_zero() {
        return Err(SymfunError::ZeroShift);
    }
    let e1 = e1(s);
    let num = prod_shift(s, d) - BigInt::from(prod_over(s)) - d * BigInt::from(e1.clone());
    let r = exact_div(&num, &(d * d)).expect("first-order remainder divides exactly");
    Ok(FirstOrderExpansion {
        e1,
        r,
        shift: d.clone(),
    })
}

/// Extracts the full witness quadruple (e1, R, e2, T) for (s, d).
pub fn second_order_remainder(
    s: &IndexSet,
    d: &BigInt,
) -> Result<ExpansionWitness, SymfunError> {
    if d.is_zero() {
        return Err(SymfunError::ZeroShift);
    }
    let first = first_order_remainder(s, d)?;
    let e2 = e2(s);
    let num = (&first.r - BigInt::from(e2.clone())) * d * d;
    let t = exact_div(&num, &(d * d * d)).expect("second-order remainder divides exactly");
    Ok(ExpansionWitness {
        e1: first.e1,
        r: first.r,
        e2,
        t,
        shift: d.clone(),
    })
}

/// Computes T by the structural recursion T({a} ∪ s) = e2(s) + a*T0 + d*T0,
/// peeling the smallest element first; T of the empty set is 0.
///
/// Total in d: at d = 0 it returns the canonical value (the third
/// elementary symmetric product), and for d != 0 it agrees with the
/// division-based T of [`second_order_remainder`].
pub fn second_order_witness_recursive(s: &IndexSet, d: &BigInt) -> BigInt {
    // Walk suffixes right to left, maintaining prod/e1/e2 of the suffix
    // via the cons recurrences, so the whole pass is O(|s|) big-int ops.
    let mut suffix_prod = BigUint::one();
    let mut suffix_e1 = BigUint::zero();
    let mut suffix_e2 = BigUint::zero();
    let mut t = BigInt::zero();
    for &a in s.elements().iter().rev() {
        t = BigInt::from(suffix_e2.clone()) + (d + a) * &t;
        suffix_e2 = &suffix_e1 + &suffix_e2 * a;
        suffix_e1 = &suffix_prod + &suffix_e1 * a;
        suffix_prod *= a;
    }
    t
}

/// prod, e1, e2 of the canonical set {1, ..., n}, built by the cons
/// recurrences in O(n) big-integer operations.
///
/// Certificate construction uses this instead of the erased-product loops,
/// which are cubic in n; equality of the two routes is covered by tests.
pub fn range_elementary(n: u64) -> (BigUint, BigUint, BigUint) {
    let mut prod = BigUint::one();
    let mut sym1 = BigUint::zero();
    let mut sym2 = BigUint::zero();
    for a in (1..=n).rev() {
        sym2 = &sym1 + &sym2 * a;
        sym1 = &prod + &sym1 * a;
        prod *= a;
    }
    (prod, sym1, sym2)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn set(elems: &[u64]) -> IndexSet {
        IndexSet::new(elems.iter().copied())
    }

    /// Independent oracle: coefficients of prod over k in s of (x + k),
    /// ascending powers. c[0] = prod, c[1] = e1, c[2] = e2, and the
    /// witnesses are tail evaluations R = sum c[i] d^(i-2), T = sum
    /// c[i] d^(i-3).
    fn expansion_coefficients(s: &IndexSet) -> Vec<BigInt> {
        let mut coeffs = vec![BigInt::one()];
        for &k in s.elements() {
            let mut next = vec![BigInt::zero(); coeffs.len() + 1];
            for (i, c) in coeffs.iter().enumerate() {
                next[i] += c * k;
                next[i + 1] += c;
            }
            coeffs = next;
        }
        coeffs
    }

    fn tail_eval(coeffs: &[BigInt], from: usize, d: &BigInt) -> BigInt {
        let mut acc = BigInt::zero();
        for c in coeffs[from.min(coeffs.len())..].iter().rev() {
            acc = acc * d + c;
        }
        acc
    }

    #[test]
    fn prod_over_examples() {
        assert_eq!(prod_over(&set(&[])), BigUint::from(1u32));
        assert_eq!(prod_over(&set(&[1, 2, 3])), BigUint::from(6u32));
        assert_eq!(prod_over(&set(&[1, 2, 3, 4])), BigUint::from(24u32));
    }

    #[test]
    fn prod_shift_examples() {
        assert_eq!(
            prod_shift(&set(&[1, 2, 3]), &BigInt::from(1)),
            BigInt::from(24)
        );
        assert_eq!(prod_shift(&set(&[]), &BigInt::from(-9)), BigInt::one());
        // 6*7*8*9, the p = 5 instance of the product identity
        assert_eq!(
            prod_shift(&set(&[1, 2, 3, 4]), &BigInt::from(5)),
            BigInt::from(3024)
        );
        // shift hitting an element gives a zero factor
        assert_eq!(
            prod_shift(&set(&[2, 5]), &BigInt::from(-2)),
            BigInt::zero()
        );
        assert_eq!(prod_shift(&set(&[3]), &BigInt::from(-5)), BigInt::from(-2));
    }

    #[test]
    fn e1_examples() {
        assert_eq!(e1(&set(&[1, 2, 3])), BigUint::from(11u32));
        assert_eq!(e1(&set(&[])), BigUint::zero());
        assert_eq!(e1(&set(&[7])), BigUint::one());
        // equals S1 for p = 5
        assert_eq!(e1(&set(&[1, 2, 3, 4])), BigUint::from(50u32));
    }

    #[test]
    fn e2_examples() {
        assert_eq!(e2(&set(&[1, 2, 3])), BigUint::from(6u32));
        assert_eq!(e2(&set(&[9])), BigUint::zero());
        assert_eq!(e2(&set(&[])), BigUint::zero());
        assert_eq!(e2(&set(&[1, 2, 3, 4])), BigUint::from(35u32));
    }

    #[test]
    fn symmetric_functions_match_polynomial_oracle() {
        let sets: &[&[u64]] = &[
            &[],
            &[1],
            &[4],
            &[1, 2],
            &[2, 3],
            &[1, 2, 3],
            &[2, 3, 4],
            &[1, 2, 3, 4],
            &[1, 2, 3, 5],
            &[3, 7, 11, 20],
            &[1, 2, 3, 4, 5, 6],
            &[2, 9, 10, 31, 44, 50],
        ];
        for elems in sets {
            let s = set(elems);
            let c = expansion_coefficients(&s);
            assert_eq!(BigInt::from(prod_over(&s)), c[0], "{elems:?}");
            assert_eq!(BigInt::from(e1(&s)), tail_eval(&c, 1, &BigInt::zero()), "{elems:?}");
            assert_eq!(BigInt::from(e2(&s)), tail_eval(&c, 2, &BigInt::zero()), "{elems:?}");
        }
    }

    #[test]
    fn e2_cons_examples() {
        assert_eq!(e2_cons_check(1, &set(&[2, 3, 4])), Ok(true));
        assert_eq!(e2_cons_check(17, &set(&[])), Ok(true));
        // e2({1,2,3,5}) = 11 + 5*6 = 41, confirmed by direct enumeration
        assert_eq!(e2(&set(&[1, 2, 3, 5])), BigUint::from(41u32));
        assert_eq!(e2_cons_check(5, &set(&[1, 2, 3])), Ok(true));
        assert_eq!(
            e2_cons_check(2, &set(&[1, 2, 3])),
            Err(SymfunError::ElementPresent(2))
        );
    }

    #[test]
    fn first_order_examples() {
        let fo = |elems: &[u64], d: i64| first_order_remainder(&set(elems), &BigInt::from(d));
        assert_eq!(fo(&[1, 2, 3], 1).unwrap().r, BigInt::from(7));
        assert_eq!(fo(&[6], 13).unwrap().r, BigInt::zero());
        assert_eq!(fo(&[1, 2, 3, 4], 5).unwrap().r, BigInt::from(110));
        assert_eq!(fo(&[1, 2], 0), Err(SymfunError::ZeroShift));
    }

    #[test]
    fn second_order_examples() {
        let so = |elems: &[u64], d: i64| second_order_remainder(&set(elems), &BigInt::from(d));
        assert_eq!(so(&[1, 2, 3], 2).unwrap().t, BigInt::one());
        assert_eq!(so(&[6], -4).unwrap().t, BigInt::zero());
        let w = so(&[1, 2, 3, 4], 5).unwrap();
        assert_eq!(w.t, BigInt::from(15));
        assert_eq!(w.r, BigInt::from(110));
        assert_eq!(w.e2, BigUint::from(35u32));
        assert!(w.holds_for(&set(&[1, 2, 3, 4])));
        assert_eq!(so(&[1, 2], 0), Err(SymfunError::ZeroShift));
    }

    #[test]
    fn recursive_witness_examples() {
        let rec = |elems: &[u64], d: i64| {
            second_order_witness_recursive(&set(elems), &BigInt::from(d))
        };
        assert_eq!(rec(&[], 9), BigInt::zero());
        assert_eq!(rec(&[1, 2, 3], 2), BigInt::one());
        assert_eq!(rec(&[1, 2, 3, 4], 5), BigInt::from(15));
    }

    #[test]
    fn witnesses_match_oracle_on_small_grid() {
        let sets: &[&[u64]] = &[
            &[1],
            &[5],
            &[1, 2],
            &[2, 7],
            &[1, 2, 3],
            &[3, 5, 8],
            &[1, 2, 3, 4],
            &[2, 4, 9, 13],
            &[1, 3, 5, 7, 9],
        ];
        for elems in sets {
            let s = set(elems);
            let c = expansion_coefficients(&s);
            for d in -6i64..=6 {
                let d = BigInt::from(d);
                let t_rec = second_order_witness_recursive(&s, &d);
                assert_eq!(t_rec, tail_eval(&c, 3, &d), "{elems:?}, d = {d}");
                if d.is_zero() {
                    continue;
                }
                let w = second_order_remainder(&s, &d).unwrap();
                assert_eq!(w.r, tail_eval(&c, 2, &d), "{elems:?}, d = {d}");
                assert_eq!(w.t, t_rec, "{elems:?}, d = {d}");
                assert!(w.holds_for(&s), "{elems:?}, d = {d}");
            }
        }
    }

    #[test]
    fn degree_sanity() {
        // |s| = 2: T = 0 and R = e2; |s| = 3: T = 1.
        for d in [-7i64, -1, 2, 11] {
            let d = BigInt::from(d);
            let pair = second_order_remainder(&set(&[4, 9]), &d).unwrap();
            assert_eq!(pair.t, BigInt::zero());
            assert_eq!(pair.r, BigInt::from(pair.e2.clone()));
            let triple = second_order_remainder(&set(&[2, 5, 6]), &d).unwrap();
            assert_eq!(triple.t, BigInt::one());
        }
    }

    #[test]
    fn range_elementary_matches_direct_loops() {
        for n in 0..=12u64 {
            let s = IndexSet::range_1_to(n);
            let (prod, sym1, sym2) = range_elementary(n);
            assert_eq!(prod, prod_over(&s), "n = {n}");
            assert_eq!(sym1, e1(&s), "n = {n}");
            assert_eq!(sym2, e2(&s), "n = {n}");
        }
    }

    #[test]
    fn index_set_normalizes() {
        let s = IndexSet::new([4, 1, 4, 2]);
        assert_eq!(s.elements(), &[1, 2, 4]);
        assert!(s.contains(2));
        assert!(!s.contains(3));
        assert_eq!(s.cons(2), Err(SymfunError::ElementPresent(2)));
        assert_eq!(s.cons(3).unwrap().elements(), &[1, 2, 3, 4]);
    }

    #[test]
    #[should_panic(expected = "positive")]
    fn index_set_rejects_zero() {
        IndexSet::new([0, 1, 2]);
    }
}
