//! Real-root isolation on `[0, 1]` with Sturm sequences over exact
//! rationals.

use std::cmp::Ordering;

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

use super::{int, IntPolynomial, Rational};

/// Open interval `(lo, hi)` holding exactly one simple root, with nonzero
/// values of opposite sign at both ends.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct IsolatingInterval {
    pub lo: Rational,
    pub hi: Rational,
}

impl IsolatingInterval {
    pub fn width(&self) -> Rational {
        &self.hi - &self.lo
    }

    pub fn midpoint(&self) -> Rational {
        (&self.lo + &self.hi) / int(2)
    }

    pub fn contains(&self, x: &Rational) -> bool {
        &self.lo < x && x < &self.hi
    }
}

/// Where a given rational sits relative to a root set.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum PointMembership {
    ExactMember,
    /// Not a root, but inside the isolating interval of one.
    NearMember,
    NonMember,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum RootEntry {
    Exact(Rational),
    Interval(IsolatingInterval),
}

#[derive(Debug, Clone)]
pub enum RootOutcome {
    /// The input polynomial is zero, so every point is a root.
    IdenticallyZero,
    Roots(RootSet),
}

/// Distinct real roots of a polynomial in `[0, 1]`.
#[derive(Debug, Clone)]
pub struct RootSet {
    square_free: IntPolynomial,
    sturm: Vec<IntPolynomial>,
    /// Rational roots, ascending.
    pub exact: Vec<Rational>,
    /// Irrational roots, ascending.
    pub intervals: Vec<IsolatingInterval>,
}

fn sturm_sequence(q: &IntPolynomial) -> Vec<IntPolynomial> {
    let mut seq = vec![q.clone()];
    let d = q.derivative().primitive();
    if d.is_zero() {
        return seq;
    }
    seq.push(d);
    loop {
        let (a, b) = (&seq[seq.len() - 2], &seq[seq.len() - 1]);
        if b.degree() == Some(0) {
            break;
        }
        let (r, sign) = a.pseudo_rem(b);
        if r.is_zero() {
            break;
        }
        // next = -rem(a, b), up to a positive factor
        let c = r.content();
        let next = IntPolynomial::new(
            r.coeffs()
                .iter()
                .map(|x| if sign == Ordering::Greater { -(x / &c) } else { x / &c })
                .collect(),
        );
        seq.push(next);
    }
    seq
}

fn variations(seq: &[IntPolynomial], x: &Rational) -> usize {
    let mut count = 0;
    let mut last = Ordering::Equal;
    for p in seq {
        let s = p.sign_at(x);
        if s == Ordering::Equal {
            continue;
        }
        if last != Ordering::Equal && s != last {
            count += 1;
        }
        last = s;
    }
    count
}

/// Smallest-denominator rational strictly between `lo` and `hi`
/// (`hi = None` means unbounded). Requires `0 <= lo < hi`.
fn simplest_between(lo: &Rational, hi: Option<&Rational>) -> Rational {
    let fl = lo.floor();
    let next = &fl + int(1);
    if hi.is_none_or(|h| &next < h) {
        return next;
    }
    let hi = hi.unwrap();
    let frac_lo = lo - &fl;
    let upper = (!frac_lo.is_zero()).then(|| frac_lo.recip());
    let inner = simplest_between(&(hi - &fl).recip(), upper.as_ref());
    fl + inner.recip()
}

impl RootSet {
    /// Isolates the distinct roots of `poly` in the closed interval `[0, 1]`.
    pub fn isolate(poly: &IntPolynomial) -> RootOutcome {
        if poly.is_zero() {
            return RootOutcome::IdenticallyZero;
        }
        let square_free = poly.square_free();
        let sturm = sturm_sequence(&square_free);
        let mut set = RootSet {
            square_free,
            sturm,
            exact: Vec::new(),
            intervals: Vec::new(),
        };
        let (zero, one) = (int(0), int(1));
        for end in [&zero, &one] {
            if set.is_root(end) {
                set.exact.push(end.clone());
            }
        }
        let mut stack = vec![(zero.clone(), one.clone())];
        while let Some((a, b)) = stack.pop() {
            let c = set.count_open(&a, &b);
            if c == 0 {
                continue;
            }
            if c == 1 && !set.is_root(&a) && !set.is_root(&b) {
                let interval = IsolatingInterval { lo: a, hi: b };
                match set.rational_root_in(&interval) {
                    Some(r) => set.exact.push(r),
                    None => set.intervals.push(interval),
                }
                continue;
            }
            let m = (&a + &b) / int(2);
            if set.is_root(&m) {
                set.exact.push(m.clone());
            }
            stack.push((a, m.clone()));
            stack.push((m, b));
        }
        set.exact.sort();
        set.intervals.sort_by(|x, y| x.lo.cmp(&y.lo));
        RootOutcome::Roots(set)
    }

    /// The square-free polynomial whose roots are isolated.
    pub fn square_free(&self) -> &IntPolynomial {
        &self.square_free
    }

    pub fn len(&self) -> usize {
        self.exact.len() + self.intervals.len()
    }

    pub fn is_empty(&self) -> bool {
        self.len() == 0
    }

    pub fn is_root(&self, x: &Rational) -> bool {
        self.square_free.sign_at(x) == Ordering::Equal
    }

    /// Number of distinct roots in the open interval `(a, b)`, `a < b`.
    pub fn count_open(&self, a: &Rational, b: &Rational) -> usize {
        let diff = variations(&self.sturm, a) - variations(&self.sturm, b);
        diff - usize::from(self.is_root(b))
    }

    /// Exact roots and intervals merged in ascending order.
    pub fn entries(&self) -> Vec<RootEntry> {
        let mut out: Vec<RootEntry> = self
            .exact
            .iter()
            .cloned()
            .map(RootEntry::Exact)
            .chain(self.intervals.iter().cloned().map(RootEntry::Interval))
            .collect();
        out.sort_by(|a, b| entry_key(a).cmp(entry_key(b)));
        out
    }

    /// Classifies `x`. `NearMember` is reported whenever some irrational
    /// root lies within `tolerance` of `x`, and only if one lies within
    /// twice that.
    pub fn membership(&self, x: &Rational, tolerance: &Rational) -> PointMembership {
        if self.exact.contains(x) {
            return PointMembership::ExactMember;
        }
        let near = self.intervals.iter().any(|i| {
            let narrow = match self.refine_interval(i, tolerance) {
                Ok(narrow) => narrow,
                Err(root) => IsolatingInterval { lo: root.clone(), hi: root },
            };
            &narrow.lo - tolerance <= *x && *x <= &narrow.hi + tolerance
        });
        if near {
            PointMembership::NearMember
        } else {
            PointMembership::NonMember
        }
    }

    /// Like [`decimal_interval`](Self::decimal_interval), but for the odds
    /// `t = x / (1 - x)` of the root: an interval `[r - h, r + h]` in `t`
    /// whose preimage isolates the root. Requires the root to lie below 1.
    pub fn odds_decimal_interval(
        &self,
        interval: &IsolatingInterval,
        digits: u32,
    ) -> Option<IsolatingInterval> {
        let one = int(1);
        if interval.hi > one {
            return None;
        }
        let odds = |x: &Rational| x / (&one - x);
        let from_odds = |t: &Rational| t / (&one + t);
        let unit = Rational::new(BigInt::one(), BigInt::from(10u32).pow(digits));
        let half = &unit / int(2);
        let mut tol = &unit / int(1000);
        for _ in 0..64 {
            let refined = self.refine_interval(interval, &tol).ok()?;
            if refined.hi >= one {
                tol /= int(16);
                continue;
            }
            let scaled = odds(&refined.midpoint()) / &unit;
            let rounded = (scaled + Rational::new(1.into(), 2.into())).floor() * &unit;
            let candidate = IsolatingInterval {
                lo: &rounded - &half,
                hi: &rounded + &half,
            };
            if candidate.lo >= Rational::zero() {
                let (lo, hi) = (from_odds(&candidate.lo), from_odds(&candidate.hi));
                let ok = lo <= refined.lo
                    && refined.hi <= hi
                    && !self.is_root(&lo)
                    && !self.is_root(&hi)
                    && self.count_open(&lo, &hi) == 1;
                if ok {
                    return Some(candidate);
                }
            }
            tol /= int(16);
        }
        None
    }

    fn bisect(&self, interval: &mut IsolatingInterval) -> Option<Rational> {
        let m = interval.midpoint();
        let sm = self.square_free.sign_at(&m);
        if sm == Ordering::Equal {
            return Some(m);
        }
        if sm == self.square_free.sign_at(&interval.lo) {
            interval.lo = m;
        } else {
            interval.hi = m;
        }
        None
    }

    /// Narrows `interval` until its width is at most `tolerance`. Returns
    /// `Err(root)` if a bisection point lands exactly on the root.
    pub fn refine_interval(
        &self,
        interval: &IsolatingInterval,
        tolerance: &Rational,
    ) -> Result<IsolatingInterval, Rational> {
        let mut cur = interval.clone();
        while cur.width() > *tolerance {
            if let Some(root) = self.bisect(&mut cur) {
                return Err(root);
            }
        }
        Ok(cur)
    }

    /// A rational within `tolerance` of the root isolated by `interval`.
    pub fn refine(&self, interval: &IsolatingInterval, tolerance: &Rational) -> Rational {
        match self.refine_interval(interval, tolerance) {
            Ok(i) => i.midpoint(),
            Err(root) => root,
        }
    }

    /// An isolating interval `[r - h, r + h]` where `r` is the root rounded
    /// to `digits` decimal places and `h` is half a unit in the last place.
    pub fn decimal_interval(&self, interval: &IsolatingInterval, digits: u32) -> Option<IsolatingInterval> {
        let unit = Rational::new(BigInt::one(), BigInt::from(10u32).pow(digits));
        let half = &unit / int(2);
        let mut tol = &unit / int(100);
        for _ in 0..64 {
            let refined = match self.refine_interval(interval, &tol) {
                Ok(i) => i,
                Err(_) => return None,
            };
            let scaled = refined.midpoint() / &unit;
            let rounded = (scaled + Rational::new(1.into(), 2.into())).floor() * &unit;
            let candidate = IsolatingInterval {
                lo: &rounded - &half,
                hi: &rounded + &half,
            };
            let ok = candidate.lo <= refined.lo
                && refined.hi <= candidate.hi
                && !self.is_root(&candidate.lo)
                && !self.is_root(&candidate.hi)
                && self.count_open(&candidate.lo, &candidate.hi) == 1;
            if ok {
                return Some(candidate);
            }
            tol /= int(16);
        }
        None
    }

    /// Detects a rational root inside a single-root interval. Any rational
    /// root `a/b` of a primitive integer polynomial has `b | lc`, and two
    /// fractions with denominators at most `L` differ by at least `1/L^2`.
    fn rational_root_in(&self, interval: &IsolatingInterval) -> Option<Rational> {
        let lead = self.square_free.leading()?.abs();
        let tol = Rational::new(BigInt::one(), &lead * &lead * 2u32);
        let narrow = match self.refine_interval(interval, &tol) {
            Ok(i) => i,
            Err(root) => return Some(root),
        };
        let candidate = simplest_between(&narrow.lo, Some(&narrow.hi));
        (candidate.denom() <= &lead && self.is_root(&candidate)).then_some(candidate)
    }
}

fn entry_key(e: &RootEntry) -> &Rational {
    match e {
        RootEntry::Exact(r) => r,
        RootEntry::Interval(i) => &i.lo,
    }
}

/// Whether `x` is a root of `poly`; decided by exact evaluation.
pub fn is_exact_root(poly: &IntPolynomial, x: &Rational) -> bool {
    poly.sign_at(x) == Ordering::Equal
}
