//! Double-double arithmetic: unevaluated sums `hi + lo` of two `f64`s giving
//! roughly 106 bits of mantissa.
//!
//! The series evaluation of entire functions with alternating terms loses
//! `log2(max_term / result)` bits to cancellation. Plain `f64` summation is
//! hopeless once that ratio passes ~1e13; carrying partial sums in
//! double-double pushes the usable range to ratios near 1e30, which is what
//! the power-series branches of the special functions in this crate rely on.
//!
//! Algorithms follow Dekker and the QD library of Hida, Li and Bailey.
//! Products use the hardware FMA.

#[derive(Clone, Copy, Debug, PartialEq)]
pub struct Dd {
    pub hi: f64,
    pub lo: f64,
}

#[inline]
fn quick_two_sum(a: f64, b: f64) -> (f64, f64) {
    // requires |a| >= |b|
    let s = a + b;
    (s, b - (s - a))
}

#[inline]
fn two_sum(a: f64, b: f64) -> (f64, f64) {
    let s = a + b;
    let bb = s - a;
    (s, (a - (s - bb)) + (b - bb))
}

#[inline]
fn two_prod(a: f64, b: f64) -> (f64, f64) {
    let p = a * b;
    (p, a.mul_add(b, -p))
}

impl Dd {
    pub const ZERO: Dd = Dd { hi: 0.0, lo: 0.0 };
    pub const ONE: Dd = Dd { hi: 1.0, lo: 0.0 };
    pub const LN2: Dd = Dd {
        hi: 0.693_147_180_559_945_3,
        lo: 2.319_046_813_846_299_6e-17,
    };
    pub const HALF_LN_2PI: Dd = Dd {
        hi: 0.918_938_533_204_672_8,
        lo: -3.878_294_158_067_241_4e-17,
    };

    #[inline]
    pub const fn new(hi: f64, lo: f64) -> Dd {
        Dd { hi, lo }
    }

    #[inline]
    pub fn from_f64(x: f64) -> Dd {
        Dd { hi: x, lo: 0.0 }
    }

    /// Exact sum of two doubles as a Dd.
    #[inline]
    pub fn from_sum(a: f64, b: f64) -> Dd {
        let (hi, lo) = two_sum(a, b);
        Dd { hi, lo }
    }

    /// Exact product of two doubles as a Dd.
    #[inline]
    pub fn from_prod(a: f64, b: f64) -> Dd {
        let (hi, lo) = two_prod(a, b);
        Dd { hi, lo }
    }

    #[inline]
    pub fn to_f64(self) -> f64 {
        self.hi + self.lo
    }

    #[inline]
    pub fn abs(self) -> Dd {
        if self.hi < 0.0 || (self.hi == 0.0 && self.lo < 0.0) {
            -self
        } else {
            self
        }
    }

    #[inline]
    pub fn add(self, o: Dd) -> Dd {
        let (s1, s2) = two_sum(self.hi, o.hi);
        let (t1, t2) = two_sum(self.lo, o.lo);
        let (s1, s2) = quick_two_sum(s1, s2 + t1);
        let (hi, lo) = quick_two_sum(s1, s2 + t2);
        Dd { hi, lo }
    }

    #[inline]
    pub fn sub(self, o: Dd) -> Dd {
        self.add(-o)
    }

    #[inline]
    pub fn mul(self, o: Dd) -> Dd {
        let (p1, p2) = two_prod(self.hi, o.hi);
        let p2 = p2 + self.hi * o.lo + self.lo * o.hi;
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
        let (s, e) = quick_two_sum(q1, q2);
        Dd { hi: s, lo: e }.add(Dd::from_f64(q3))
    }

    #[inline]
    pub fn mul_f64(self, c: f64) -> Dd {
        let (p1, p2) = two_prod(self.hi, c);
        let (hi, lo) = quick_two_sum(p1, p2 + self.lo * c);
        Dd { hi, lo }
    }

    /// Multiply by a power of two (exact).
    #[inline]
    pub fn ldexp(self, k: i32) -> Dd {
        let f = (k as f64).exp2();
        Dd {
            hi: self.hi * f,
            lo: self.lo * f,
        }
    }

    pub fn recip(self) -> Dd {
        Dd::ONE.div(self)
    }

    /// exp(self), accurate to ~1e-31 relative. Overflows to f64 infinity
    /// above ~709.8 and underflows to zero below ~-745, like `f64::exp`.
    pub fn exp(self) -> Dd {
        if self.hi > 709.8 {
            return Dd::from_f64(f64::INFINITY);
        }
        if self.hi < -745.2 {
            return Dd::ZERO;
        }
        // self = k ln2 + r, exp(r) by Taylor on r/32 then 5 squarings
        let k = (self.hi / std::f64::consts::LN_2).round();
        let r = self.sub(Dd::LN2.mul_f64(k)).ldexp(-5);
        let mut sum = Dd::ONE.add(r);
        let mut term = r;
        for n in 2..22 {
            term = term.mul(r).div(Dd::from_f64(n as f64));
            sum = sum.add(term);
            if term.hi.abs() < 1e-35 * sum.hi.abs() {
                break;
            }
        }
        for _ in 0..5 {
            sum = sum.mul(sum);
        }
        sum.ldexp(k as i32)
    }

    /// Natural log for positive values: one Newton step on the f64 estimate.
    pub fn ln(self) -> Dd {
        debug_assert!(self.hi > 0.0);
        let y0 = self.hi.ln();
        let e = Dd::from_f64(-y0).exp();
        // y1 = y0 + x*exp(-y0) - 1
        Dd::from_f64(y0).add(self.mul(e).sub(Dd::ONE))
    }

    /// ln Gamma for positive arguments via the Stirling series, shifting
    /// arguments below 26 upward with the recurrence.
    pub fn ln_gamma(self) -> Dd {
        debug_assert!(self.hi > 0.0);
        let mut x = self;
        let mut shift = Dd::ONE;
        let mut shifted = false;
        while x.hi < 26.0 {
            shift = shift.mul(x);
            x = x.add(Dd::ONE);
            shifted = true;
        }
        let u = x.recip();
        let u2 = u.mul(u);
        let mut s = Dd::ZERO;
        for c in STIRLING.iter().rev() {
            s = s.mul(u2).add(*c);
        }
        s = s.mul(u);
        // (x - 1/2) ln x - x + ln(2 pi)/2 + s
        let mut r = x
            .sub(Dd::new(0.5, 0.0))
            .mul(x.ln())
            .sub(x)
            .add(Dd::HALF_LN_2PI)
            .add(s);
        if shifted {
            r = r.sub(shift.ln());
        }
        r
    }
}

impl std::ops::Neg for Dd {
    type Output = Dd;
    #[inline]
    fn neg(self) -> Dd {
        Dd {
            hi: -self.hi,
            lo: -self.lo,
        }
    }
}

/// Bernoulli-number coefficients B_{2n} / (2n (2n-1)) of the Stirling series,
/// n = 1..=16. Enough terms for full double-double accuracy at x >= 26.
const STIRLING: [Dd; 16] = [
    Dd::new(0.08333333333333333, 4.625929269271485e-18),
    Dd::new(-0.002777777777777778, 1.0601087908747154e-19),
    Dd::new(0.0007936507936507937, 6.883823317368282e-22),
    Dd::new(-0.0005952380952380953, 5.36938218754726e-20),
    Dd::new(0.0008417508417508417, 3.6870174889237694e-20),
    Dd::new(-0.0019175269175269176, 1.0675702776872475e-19),
    Dd::new(0.00641025641025641, 2.2240044563805217e-19),
    Dd::new(-0.029550653594771242, 4.861760957508855e-19),
    Dd::new(0.17964437236883057, -6.401600482710946e-19),
    Dd::new(-1.3924322169059011, 1.5837056989230303e-17),
    Dd::new(13.402864044168393, -6.154114101993966e-16),
    Dd::new(-156.84828462600203, 9.391823141715389e-15),
    Dd::new(2193.1033333333335, -1.3339255626002948e-13),
    Dd::new(-36108.77125372499, 5.897583353514365e-13),
    Dd::new(691472.268851313, 2.5585296305158e-11),
    Dd::new(-15238221.539407415, -8.76774522490625e-10),
];

/// Complex number with double-double components, just enough surface for
/// power-series accumulation.
#[derive(Clone, Copy, Debug)]
pub struct Cdd {
    pub re: Dd,
    pub im: Dd,
}

impl Cdd {
    pub const ZERO: Cdd = Cdd {
        re: Dd::ZERO,
        im: Dd::ZERO,
    };
    pub const ONE: Cdd = Cdd {
        re: Dd::ONE,
        im: Dd::ZERO,
    };

    #[inline]
    pub fn from_f64(re: f64, im: f64) -> Cdd {
        Cdd {
            re: Dd::from_f64(re),
            im: Dd::from_f64(im),
        }
    }

    #[inline]
    pub fn add(self, o: Cdd) -> Cdd {
        Cdd {
            re: self.re.add(o.re),
            im: self.im.add(o.im),
        }
    }

    #[inline]
    pub fn mul(self, o: Cdd) -> Cdd {
        Cdd {
            re: self.re.mul(o.re).sub(self.im.mul(o.im)),
            im: self.re.mul(o.im).add(self.im.mul(o.re)),
        }
    }

    #[inline]
    pub fn mul_dd(self, c: Dd) -> Cdd {
        Cdd {
            re: self.re.mul(c),
            im: self.im.mul(c),
        }
    }

    /// Cheap magnitude estimate (1-norm of the hi parts).
    #[inline]
    pub fn mag(self) -> f64 {
        self.re.hi.abs() + self.im.hi.abs()
    }
}
