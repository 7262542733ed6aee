//! Spanning-tree count polynomials of cycle chains.
//!
//! `F_n` is defined by the recurrence
//!
//! ```text
//! F_1(x_1) = x_1
//! F_{i+1}(x_1, .., x_{i+1}) = F_i(x_1, .., x_i - 1) + (x_{i+1} - 1) * F_i(x_1, .., x_i)
//! ```
//!
//! and `G_n` is the alternating sum `γ_{n,n} - γ_{n-2,n} + γ_{n-4,n} - ...`
//! of the index-set polynomials below. The two agree for every argument
//! vector. Evaluation is generic over [`RingScalar`], so the same code runs
//! on machine integers, big integers or floats.
//!
//! `C_{i,j}` is the family of `i`-subsets of `1..=j` whose gap-adjacent
//! elements differ by an odd amount and whose maximum has the parity of `j`.
//! `B_{i,j}` are the members containing `j`, `A_{i,j}` the rest. By
//! convention `C_{0,j} = {∅}`, so `γ_{0,j} = 1`.

use crate::error::{Error, Result};
use crate::scalar::RingScalar;

/// Evaluates the recurrence for `F_n` exactly.
///
/// Only two values per level are needed, `F_i(.., x_i)` and
/// `F_i(.., x_i - 1)`, so this runs in linear time. Arguments below 2 are
/// accepted; the recurrence is polynomial.
pub fn f_recursive<T: RingScalar>(x: &[T]) -> Result<T> {
    let (first, rest) = x.split_first().ok_or(Error::EmptyArgs)?;
    let one = T::one();
    let two = one.clone() + one.clone();
    let mut at = first.clone();
    let mut below = first.clone() - one.clone();
    for xi in rest {
        let next_at = below.clone() + (xi.clone() - one.clone()) * at.clone();
        let next_below = below + (xi.clone() - two.clone()) * at;
        at = next_at;
        below = next_below;
    }
    Ok(at)
}

/// A member of `C_{i,j}`: strictly increasing indices in `1..=j`.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct IndexSet {
    elements: Vec<usize>,
    context: usize,
}

impl IndexSet {
    /// Accepts `elements` only if they form a member of `C_{|elements|, context}`.
    pub fn new(elements: Vec<usize>, context: usize) -> Result<Self> {
        if !satisfies_conditions(&elements, context) {
            return Err(Error::InvalidSpec(format!(
                "{elements:?} is not an admissible index set for j = {context}"
            )));
        }
        Ok(IndexSet { elements, context })
    }

    pub fn elements(&self) -> &[usize] {
        &self.elements
    }

    pub fn context(&self) -> usize {
        self.context
    }

    pub fn len(&self) -> usize {
        self.elements.len()
    }

    pub fn is_empty(&self) -> bool {
        self.elements.is_empty()
    }

    /// Membership in `B_{i,j}`.
    pub fn contains_last(&self) -> bool {
        self.elements.last() == Some(&self.context)
    }
}

fn satisfies_conditions(elements: &[usize], j: usize) -> bool {
    let Some(&max) = elements.last() else {
        return true;
    };
    elements.first().is_some_and(|&lo| lo >= 1)
        && max <= j
        && (j - max).is_multiple_of(2)
        && elements.windows(2).all(|w| w[0] < w[1] && (w[1] - w[0]) % 2 == 1)
}

/// Calls `visit` with every member of `C_{i,j}` as an increasing slice.
///
/// Members are generated top-down: the maximum steps down from `j` by 2 and
/// each smaller element sits an odd distance below its successor, so only
/// admissible sets are ever produced.
pub fn for_each_c(i: usize, j: usize, mut visit: impl FnMut(&[usize])) {
    if i == 0 {
        visit(&[]);
        return;
    }
    if i > j {
        return;
    }
    let mut stack = Vec::with_capacity(i);
    let mut scratch = Vec::with_capacity(i);
    let mut top = j;
    while top >= i {
        stack.push(top);
        descend(i - 1, &mut stack, &mut scratch, &mut visit);
        stack.pop();
        if top < 2 {
            break;
        }
        top -= 2;
    }
}

fn descend(remaining: usize, stack: &mut Vec<usize>, scratch: &mut Vec<usize>, visit: &mut impl FnMut(&[usize])) {
    if remaining == 0 {
        scratch.clear();
        scratch.extend(stack.iter().rev());
        visit(scratch);
        return;
    }
    let last = *stack.last().expect("stack holds the current minimum");
    let mut e = last - 1;
    while e >= remaining {
        stack.push(e);
        descend(remaining - 1, stack, scratch, visit);
        stack.pop();
        if e < 2 {
            break;
        }
        e -= 2;
    }
}

/// All members of `C_{i,j}` in lexicographic order.
pub fn enumerate_c(i: usize, j: usize) -> Vec<IndexSet> {
    let mut out = Vec::new();
    for_each_c(i, j, |s| {
        out.push(IndexSet {
            elements: s.to_vec(),
            context: j,
        })
    });
    out.sort();
    out
}

/// Splits `C_{i,j}` into `(A_{i,j}, B_{i,j})` by whether `j` is a member.
pub fn split_ab(i: usize, j: usize) -> (Vec<IndexSet>, Vec<IndexSet>) {
    enumerate_c(i, j).into_iter().partition(|s| !s.contains_last())
}

#[derive(Clone, Copy)]
enum Part {
    All,
    WithoutLast,
    WithLast,
}

fn check_arity(expected: usize, got: usize) -> Result<()> {
    if expected != got {
        return Err(Error::ArityMismatch { expected, got });
    }
    Ok(())
}

/// Sum over the selected part of `C_{i,j}` of the product of the selected
/// coordinates; when `drop_last` the factor for index `j` is replaced by 1.
fn sum_products<T: RingScalar>(i: usize, j: usize, x: &[T], part: Part, drop_last: bool) -> T {
    let mut total = T::zero();
    for_each_c(i, j, |set| {
        let has_last = set.last() == Some(&j);
        let keep = match part {
            Part::All => true,
            Part::WithoutLast => !has_last,
            Part::WithLast => has_last,
        };
        if !keep {
            return;
        }
        let term = set
            .iter()
            .filter(|&&e| !(drop_last && e == j))
            .fold(T::one(), |acc, &e| acc * x[e - 1].clone());
        total = total.clone() + term;
    });
    total
}

/// `γ_{i,j}(x_1, .., x_j)`.
pub fn eval_gamma<T: RingScalar>(i: usize, j: usize, x: &[T]) -> Result<T> {
    check_arity(j, x.len())?;
    Ok(sum_products(i, j, x, Part::All, false))
}

/// `α_{i,j}(x_1, .., x_j)`, the sum over `A_{i,j}`.
pub fn eval_alpha<T: RingScalar>(i: usize, j: usize, x: &[T]) -> Result<T> {
    check_arity(j, x.len())?;
    Ok(sum_products(i, j, x, Part::WithoutLast, false))
}

/// `β_{i,j}(x_1, .., x_j)`, the sum over `B_{i,j}`.
pub fn eval_beta<T: RingScalar>(i: usize, j: usize, x: &[T]) -> Result<T> {
    check_arity(j, x.len())?;
    Ok(sum_products(i, j, x, Part::WithLast, false))
}

/// `β'_{i,j}(x_1, .., x_{j-1}) = β_{i,j}(x_1, .., x_{j-1}, 1)`.
///
/// For `j = 0` there are no arguments and the value is 0.
pub fn eval_beta_prime<T: RingScalar>(i: usize, j: usize, x: &[T]) -> Result<T> {
    check_arity(j.saturating_sub(1), x.len())?;
    if j == 0 {
        return Ok(T::zero());
    }
    Ok(sum_products(i, j, x, Part::WithLast, true))
}

/// `G_n(x) = γ_{n,n} - γ_{n-2,n} + γ_{n-4,n} - ...`, stopping at the last
/// nonnegative first index.
pub fn g_closed_form<T: RingScalar>(x: &[T]) -> Result<T> {
    let n = x.len();
    if n == 0 {
        return Err(Error::EmptyArgs);
    }
    let mut total = T::zero();
    for (t, i) in (0..=n).rev().step_by(2).enumerate() {
        let term = eval_gamma(i, n, x)?;
        total = if t % 2 == 0 { total + term } else { total - term };
    }
    Ok(total)
}
