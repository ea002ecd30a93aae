//! Double-double arithmetic (~31 significant digits).
//!
//! The alternating Mittag-Leffler series lose up to ten digits to
//! cancellation at the argument ranges this crate supports, so partial sums
//! and term recurrences run on an unevaluated sum of two doubles. Algorithms
//! follow Dekker/Knuth error-free transformations; products use FMA.

/// Unevaluated sum `hi + lo` with `|lo| <= ulp(hi)/2`.
#[derive(Clone, Copy, Debug, PartialEq)]
pub(crate) struct Dd {
    pub hi: f64,
    pub lo: f64,
}

#[inline]
fn two_sum(a: f64, b: f64) -> (f64, f64) {
    let s = a + b;
    let bb = s - a;
    let err = (a - (s - bb)) + (b - bb);
    (s, err)
}

#[inline]
fn quick_two_sum(a: f64, b: f64) -> (f64, f64) {
    let s = a + b;
    let err = b - (s - a);
    (s, err)
}

#[inline]
fn two_prod(a: f64, b: f64) -> (f64, f64) {
    let p = a * b;
    let err = f64::mul_add(a, b, -p);
    (p, err)
}

impl Dd {
    pub const ZERO: Dd = Dd { hi: 0.0, lo: 0.0 };
    pub const ONE: Dd = Dd { hi: 1.0, lo: 0.0 };
    pub const PI: Dd = Dd {
        hi: 3.141592653589793,
        lo: 1.2246467991473532e-16,
    };
    pub const LN2: Dd = Dd {
        hi: 0.6931471805599453,
        lo: 2.3190468138462996e-17,
    };
    /// ln(2π)/2
    pub const HALF_LN_2PI: Dd = Dd {
        hi: 0.9189385332046728,
        lo: -3.8782941580672414e-17,
    };

    #[inline]
    pub fn from_f64(x: f64) -> Dd {
        Dd { hi: x, lo: 0.0 }
    }

    #[inline]
    pub fn to_f64(self) -> f64 {
        self.hi + self.lo
    }

    #[inline]
    pub fn add(self, o: Dd) -> Dd {
        let (s1, s2) = two_sum(self.hi, o.hi);
        let (t1, t2) = two_sum(self.lo, o.lo);
        let (s1, s2b) = quick_two_sum(s1, s2 + t1);
        let (hi, lo) = quick_two_sum(s1, s2b + t2);
        Dd { hi, lo }
    }

    #[inline]
    pub fn add_f64(self, b: f64) -> Dd {
        let (s1, s2) = two_sum(self.hi, b);
        let (hi, lo) = quick_two_sum(s1, s2 + self.lo);
        Dd { hi, lo }
    }

    #[inline]
    pub fn sub(self, o: Dd) -> Dd {
        self.add(o.neg())
    }

    #[inline]
    pub fn neg(self) -> Dd {
        Dd {
            hi: -self.hi,
            lo: -self.lo,
        }
    }

    #[inline]
    pub fn mul(self, o: Dd) -> Dd {
        let (p1, p2) = two_prod(self.hi, o.hi);
        let p2 = p2 + self.hi * o.lo + self.lo * o.hi;
        let (hi, lo) = quick_two_sum(p1, p2);
        Dd { hi, lo }
    }

    #[inline]
    pub fn mul_f64(self, b: f64) -> Dd {
        let (p1, p2) = two_prod(self.hi, b);
        let p2 = p2 + self.lo * b;
        let (hi, lo) = quick_two_sum(p1, p2);
        Dd { hi, lo }
    }

    #[inline]
    pub fn div(self, o: Dd) -> Dd {
        let q1 = self.hi / o.hi;
        let r = self.sub(o.mul_f64(q1));
        let q2 = r.hi / o.hi;
        let r = r.sub(o.mul_f64(q2));
        let q3 = r.hi / o.hi;
        let (hi, lo) = quick_two_sum(q1, q2);
        Dd { hi, lo }.add_f64(q3)
    }

    #[inline]
    pub fn div_f64(self, b: f64) -> Dd {
        self.div(Dd::from_f64(b))
    }

    #[inline]
    pub fn recip(self) -> Dd {
        Dd::ONE.div(self)
    }

    #[inline]
    pub fn abs(self) -> Dd {
        if self.hi < 0.0 || (self.hi == 0.0 && self.lo < 0.0) {
            self.neg()
        } else {
            self
        }
    }

    /// Multiply by 2^k exactly.
    #[inline]
    pub fn ldexp(self, k: i32) -> Dd {
        let f = f64_ldexp(1.0, k);
        Dd {
            hi: self.hi * f,
            lo: self.lo * f,
        }
    }

    /// exp(self) via argument reduction and a Taylor series.
    pub fn exp(self) -> Dd {
        if self.hi > 709.0 {
            return Dd::from_f64(f64::INFINITY);
        }
        if self.hi < -745.0 {
            return Dd::ZERO;
        }
        let k = (self.hi / Dd::LN2.hi).round();
        let r = self.sub(Dd::LN2.mul_f64(k));
        // |r| <= ln2/2; Taylor with term recurrence.
        let mut sum = Dd::ONE.add(r);
        let mut term = r;
        for n in 2..40 {
            term = term.mul(r).div_f64(n as f64);
            sum = sum.add(term);
            if term.hi.abs() < 1e-35 * sum.hi.abs() {
                break;
            }
        }
        sum.ldexp(k as i32)
    }

    /// Natural log via a Newton step on a f64 seed.
    pub fn ln(self) -> Dd {
        debug_assert!(self.hi > 0.0);
        let mut y = Dd::from_f64(self.hi.ln());
        // y <- y + x*exp(-y) - 1, quadratically convergent
        for _ in 0..2 {
            let e = y.neg().exp();
            y = y.add(self.mul(e)).add_f64(-1.0);
        }
        y
    }

    /// Integer power by repeated squaring.
    pub fn powi(self, mut n: u32) -> Dd {
        let mut base = self;
        let mut acc = Dd::ONE;
        while n > 0 {
            if n & 1 == 1 {
                acc = acc.mul(base);
            }
            base = base.mul(base);
            n >>= 1;
        }
        acc
    }
}

#[inline]
fn f64_ldexp(x: f64, k: i32) -> f64 {
    // Exact for the exponent ranges used here.
    if k >= 0 {
        x * 2f64.powi(k)
    } else {
        x / 2f64.powi(-k)
    }
}

/// Stirling coefficients B_{2n}/(2n(2n-1)) for the log-gamma series.
const STIRLING: [Dd; 13] = [
    Dd { hi: 0.08333333333333333, lo: 4.625929269271485e-18 },
    Dd { hi: -0.002777777777777778, lo: 1.0601087908747154e-19 },
    Dd { hi: 0.0007936507936507937, lo: 6.883823317368282e-22 },
    Dd { hi: -0.0005952380952380953, lo: 5.36938218754726e-20 },
    Dd { hi: 0.0008417508417508417, lo: 3.6870174889237694e-20 },
    Dd { hi: -0.0019175269175269176, lo: 1.0675702776872475e-19 },
    Dd { hi: 0.00641025641025641, lo: 2.2240044563805217e-19 },
    Dd { hi: -0.029550653594771242, lo: 4.861760957508855e-19 },
    Dd { hi: 0.17964437236883057, lo: -6.401600482710946e-19 },
    Dd { hi: -1.3924322169059011, lo: 1.5837056989230303e-17 },
    Dd { hi: 13.402864044168393, lo: -6.154114101993966e-16 },
    Dd { hi: -156.84828462600203, lo: 9.391823141715389e-15 },
    Dd { hi: 2193.1033333333335, lo: -1.3339255626002948e-13 },
];

/// log Γ(z) for z > 0 in double-double precision.
///
/// Takes a double-double argument: series code must build Γ-arguments like
/// jα+β without f64 rounding, or cancellation amplifies the argument noise.
/// Shifts the argument above 30 with the functional equation and applies the
/// Stirling series there; the series remainder is below 1e-31 at z = 30.
pub(crate) fn lgamma_dd(z: Dd) -> Dd {
    debug_assert!(z.hi > 0.0);
    let mut shift = Dd::ONE;
    let mut zz = z;
    while zz.hi < 30.0 {
        shift = shift.mul(zz);
        zz = zz.add_f64(1.0);
    }
    let ln_z = zz.ln();
    // (z - 1/2) ln z - z + ln(2π)/2 + Σ c_n / z^{2n-1}
    let mut acc = zz
        .add_f64(-0.5)
        .mul(ln_z)
        .sub(zz)
        .add(Dd::HALF_LN_2PI);
    let z2 = zz.mul(zz).recip();
    let mut p = zz.recip();
    for c in STIRLING.iter() {
        acc = acc.add(c.mul(p));
        p = p.mul(z2);
        if p.hi * 2194.0 < 1e-33 {
            break;
        }
    }
    if shift.hi != 1.0 || shift.lo != 0.0 {
        acc = acc.sub(shift.ln());
    }
    acc
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn arithmetic_roundtrip() {
        let a = Dd::from_f64(0.1).add(Dd::from_f64(0.2));
        let b = a.sub(Dd::from_f64(0.2));
        assert!((b.to_f64() - 0.1).abs() < 1e-30);
        let c = Dd::from_f64(3.0).recip().mul_f64(3.0);
        assert!((c.hi - 1.0).abs() < 1e-30 && c.lo.abs() < 1e-16);
    }

    #[test]
    fn exp_ln_inverse() {
        for &x in &[1e-3, 0.5, 1.0, 2.718281828, 10.0, 100.0] {
            let y = Dd::from_f64(x).ln().exp();
            assert!(
                (y.to_f64() - x).abs() <= 4e-30 * x,
                "exp(ln({x})) = {}",
                y.to_f64()
            );
        }
        // e known to dd precision
        let e = Dd::ONE.exp();
        assert!((e.hi - 2.718281828459045).abs() < 1e-15);
        assert!((e.lo - 1.4456468917292502e-16).abs() < 1e-30);
    }

    #[test]
    fn lgamma_exact_points() {
        // Γ(1/2) = √π, Γ(10) = 362880, Γ(1) = Γ(2) = 1
        let half = lgamma_dd(Dd::from_f64(0.5));
        let target = Dd::PI.ln().mul_f64(0.5);
        assert!((half.sub(target).to_f64()).abs() < 1e-29);
        assert!((lgamma_dd(Dd::from_f64(10.0)).to_f64() - 362880f64.ln()).abs() < 1e-12);
        assert!(lgamma_dd(Dd::from_f64(1.0)).to_f64().abs() < 1e-29);
        assert!(lgamma_dd(Dd::from_f64(2.0)).to_f64().abs() < 1e-29);
        // Γ(2.5) = 1.5·0.5·√π; reference limbs from a 50-digit evaluation
        let got = lgamma_dd(Dd::from_f64(2.5));
        let want = Dd { hi: 0.2846828704729192, lo: -2.0938630583071727e-17 };
        assert!(got.sub(want).to_f64().abs() < 1e-30);
    }

    #[test]
    fn lgamma_functional_equation() {
        // lgamma(z+1) - lgamma(z) = ln z, at dyadic points so z+1 is exact
        for &z in &[0.171875, 0.9375, 1.296875, 4.75, 29.5, 33.0, 250.0] {
            let lhs = lgamma_dd(Dd::from_f64(z + 1.0)).sub(lgamma_dd(Dd::from_f64(z)));
            let rhs = Dd::from_f64(z).ln();
            assert!(
                lhs.sub(rhs).to_f64().abs() < 1e-28 * rhs.to_f64().abs().max(1.0),
                "z = {z}: residual {:e}",
                lhs.sub(rhs).to_f64()
            );
        }
    }
}
