//! Coefficient fields, symbolica-style: the field is a small context object
//! and elements are plain data. Everything downstream (states, tables, Gram
//! matrices) is generic over this trait so the same engine runs over Q,
//! Q(c,lambda), Q(k), and quadratic extensions.

use crate::mpoly::VarCtx;
use crate::rat::Rat;
use crate::ratfunc::RatFunc;
use std::fmt;
use std::sync::Arc;

pub trait Field: Clone + fmt::Debug + Send + Sync + 'static {
    type Elem: Clone + PartialEq + fmt::Debug + fmt::Display + Send + Sync + 'static;

    fn zero(&self) -> Self::Elem;
    fn one(&self) -> Self::Elem;
    fn from_rat(&self, r: &Rat) -> Self::Elem;
    fn is_zero(&self, a: &Self::Elem) -> bool;
    fn add(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem;
    fn sub(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem;
    fn mul(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem;
    fn div(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem;
    fn neg(&self, a: &Self::Elem) -> Self::Elem;

    fn from_int(&self, n: i64) -> Self::Elem {
        self.from_rat(&Rat::from_int(n))
    }

    fn mul_rat(&self, a: &Self::Elem, r: &Rat) -> Self::Elem {
        self.mul(a, &self.from_rat(r))
    }

    fn add_assign(&self, a: &mut Self::Elem, b: &Self::Elem) {
        *a = self.add(a, b);
    }
}

/// The rationals.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RatField;

impl Field for RatField {
    type Elem = Rat;

    fn zero(&self) -> Rat {
        Rat::zero()
    }
    fn one(&self) -> Rat {
        Rat::one()
    }
    fn from_rat(&self, r: &Rat) -> Rat {
        r.clone()
    }
    fn is_zero(&self, a: &Rat) -> bool {
        a.is_zero()
    }
    fn add(&self, a: &Rat, b: &Rat) -> Rat {
        a + b
    }
    fn sub(&self, a: &Rat, b: &Rat) -> Rat {
        a - b
    }
    fn mul(&self, a: &Rat, b: &Rat) -> Rat {
        a * b
    }
    fn div(&self, a: &Rat, b: &Rat) -> Rat {
        a / b
    }
    fn neg(&self, a: &Rat) -> Rat {
        -a
    }
    fn mul_rat(&self, a: &Rat, r: &Rat) -> Rat {
        a * r
    }
}

/// Rational functions over a fixed variable context.
#[derive(Clone, Debug)]
pub struct RatFuncField {
    pub ctx: Arc<VarCtx>,
}

impl RatFuncField {
    pub fn new(ctx: Arc<VarCtx>) -> Self {
        RatFuncField { ctx }
    }
}

impl Field for RatFuncField {
    type Elem = RatFunc;

    fn zero(&self) -> RatFunc {
        RatFunc::zero(&self.ctx)
    }
    fn one(&self) -> RatFunc {
        RatFunc::one(&self.ctx)
    }
    fn from_rat(&self, r: &Rat) -> RatFunc {
        RatFunc::constant(&self.ctx, r.clone())
    }
    fn is_zero(&self, a: &RatFunc) -> bool {
        a.is_zero()
    }
    fn add(&self, a: &RatFunc, b: &RatFunc) -> RatFunc {
        a.add(b)
    }
    fn sub(&self, a: &RatFunc, b: &RatFunc) -> RatFunc {
        a.sub(b)
    }
    fn mul(&self, a: &RatFunc, b: &RatFunc) -> RatFunc {
        a.mul(b)
    }
    fn div(&self, a: &RatFunc, b: &RatFunc) -> RatFunc {
        a.div(b)
    }
    fn neg(&self, a: &RatFunc) -> RatFunc {
        a.neg()
    }
    fn mul_rat(&self, a: &RatFunc, r: &Rat) -> RatFunc {
        a.scale(r)
    }
}

/// Element of a quadratic extension F[t]/(t^2 - rho): a + b*t.
#[derive(Clone, PartialEq, Debug)]
pub struct QuadElem<E> {
    pub a: E,
    pub b: E,
}

impl<E: fmt::Display> fmt::Display for QuadElem<E> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({}) + ({})*t", self.a, self.b)
    }
}

/// Quadratic extension of a base field by a square root of `rho`.
/// Used for specializing onto curves whose ideal is quadratic in lambda:
/// there t is the image of lambda and rho = lambda^2 on the curve.
#[derive(Clone, Debug)]
pub struct QuadExtField<F: Field> {
    pub base: F,
    pub rho: F::Elem,
}

impl<F: Field> QuadExtField<F> {
    pub fn new(base: F, rho: F::Elem) -> Self {
        assert!(!base.is_zero(&rho), "quadratic extension by zero");
        QuadExtField { base, rho }
    }

    pub fn embed(&self, a: F::Elem) -> QuadElem<F::Elem> {
        QuadElem {
            a,
            b: self.base.zero(),
        }
    }

    /// The adjoined square root itself.
    pub fn root(&self) -> QuadElem<F::Elem> {
        QuadElem {
            a: self.base.zero(),
            b: self.base.one(),
        }
    }
}

impl<F: Field> Field for QuadExtField<F> {
    type Elem = QuadElem<F::Elem>;

    fn zero(&self) -> Self::Elem {
        QuadElem {
            a: self.base.zero(),
            b: self.base.zero(),
        }
    }
    fn one(&self) -> Self::Elem {
        QuadElem {
            a: self.base.one(),
            b: self.base.zero(),
        }
    }
    fn from_rat(&self, r: &Rat) -> Self::Elem {
        QuadElem {
            a: self.base.from_rat(r),
            b: self.base.zero(),
        }
    }
    fn is_zero(&self, x: &Self::Elem) -> bool {
        self.base.is_zero(&x.a) && self.base.is_zero(&x.b)
    }
    fn add(&self, x: &Self::Elem, y: &Self::Elem) -> Self::Elem {
        QuadElem {
            a: self.base.add(&x.a, &y.a),
            b: self.base.add(&x.b, &y.b),
        }
    }
    fn sub(&self, x: &Self::Elem, y: &Self::Elem) -> Self::Elem {
        QuadElem {
            a: self.base.sub(&x.a, &y.a),
            b: self.base.sub(&x.b, &y.b),
        }
    }
    fn mul(&self, x: &Self::Elem, y: &Self::Elem) -> Self::Elem {
        // (a1 + b1 t)(a2 + b2 t) = a1 a2 + rho b1 b2 + (a1 b2 + b1 a2) t
        let aa = self.base.mul(&x.a, &y.a);
        let bb = self.base.mul(&x.b, &y.b);
        let a = self.base.add(&aa, &self.base.mul(&self.rho, &bb));
        let ab = self.base.mul(&x.a, &y.b);
        let ba = self.base.mul(&x.b, &y.a);
        QuadElem {
            a,
            b: self.base.add(&ab, &ba),
        }
    }
    fn div(&self, x: &Self::Elem, y: &Self::Elem) -> Self::Elem {
        // 1/(a + b t) = (a - b t) / (a^2 - rho b^2)
        assert!(!self.is_zero(y), "division by zero in quadratic extension");
        let nrm = self.base.sub(
            &self.base.mul(&y.a, &y.a),
            &self.base.mul(&self.rho, &self.base.mul(&y.b, &y.b)),
        );
        assert!(
            !self.base.is_zero(&nrm),
            "zero divisor: rho is a square in the base field"
        );
        let conj = QuadElem {
            a: y.a.clone(),
            b: self.base.neg(&y.b),
        };
        let num = self.mul(x, &conj);
        QuadElem {
            a: self.base.div(&num.a, &nrm),
            b: self.base.div(&num.b, &nrm),
        }
    }
    fn neg(&self, x: &Self::Elem) -> Self::Elem {
        QuadElem {
            a: self.base.neg(&x.a),
            b: self.base.neg(&x.b),
        }
    }
    fn mul_rat(&self, x: &Self::Elem, r: &Rat) -> Self::Elem {
        QuadElem {
            a: self.base.mul_rat(&x.a, r),
            b: self.base.mul_rat(&x.b, r),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn quad_ext_arithmetic() {
        // Q(sqrt 2)
        let k = QuadExtField::new(RatField, Rat::from_int(2));
        let t = k.root();
        let x = k.add(&k.from_int(1), &t); // 1 + sqrt2
        let y = k.sub(&k.from_int(1), &t); // 1 - sqrt2
        assert_eq!(k.mul(&x, &y), k.from_int(-1));
        let inv = k.div(&k.one(), &x);
        assert_eq!(k.mul(&inv, &x), k.one());
    }
}
