//! Homogeneous polynomials in x, y, z with exact rational coefficients.
//!
//! A [`Form`] of degree d stores its coefficients densely, indexed by the
//! fixed monomial order on exponent triples (a,b,c) with a+b+c = d:
//! lexicographically increasing in (a,b,c). The same order is used for
//! every graded piece throughout the crate, so coefficient vectors of
//! forms are directly the coordinate vectors of graded linear maps.

pub mod parse;

pub use parse::{parse_form, parse_form_with_cap, ParseError};

use num_bigint::BigInt;
use num_traits::{One, Zero};
use std::fmt;

use crate::scalar::{self, Scalar};

/// Number of monomials of degree `d` in three variables.
pub fn monomial_count(d: usize) -> usize {
    (d + 1) * (d + 2) / 2
}

/// Position of x^a y^b z^c in the degree-(a+b+c) basis.
pub fn monomial_index(d: usize, a: usize, b: usize) -> usize {
    debug_assert!(a + b <= d);
    a * (d + 1) - a * (a.saturating_sub(1)) / 2 + b
}

/// The ordered exponent triples of one graded piece.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MonomialBasis {
    degree: usize,
    entries: Vec<(usize, usize, usize)>,
}

impl MonomialBasis {
    pub fn new(degree: usize) -> MonomialBasis {
        let mut entries = Vec::with_capacity(monomial_count(degree));
        for a in 0..=degree {
            for b in 0..=(degree - a) {
                entries.push((a, b, degree - a - b));
            }
        }
        MonomialBasis { degree, entries }
    }

    pub fn degree(&self) -> usize {
        self.degree
    }

    pub fn entries(&self) -> &[(usize, usize, usize)] {
        &self.entries
    }

    pub fn len(&self) -> usize {
        self.entries.len()
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }
}

/// A homogeneous polynomial. The zero form keeps its degree so graded maps
/// have well-typed zero images.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Form {
    degree: usize,
    coeffs: Vec<Scalar>,
}

impl Form {
    pub fn zero(degree: usize) -> Form {
        Form {
            degree,
            coeffs: vec![Scalar::zero(); monomial_count(degree)],
        }
    }

    pub fn from_coeffs(degree: usize, coeffs: Vec<Scalar>) -> Form {
        assert_eq!(coeffs.len(), monomial_count(degree), "coefficient length");
        Form { degree, coeffs }
    }

    /// The single monomial c · x^a y^b z^c.
    pub fn monomial(a: usize, b: usize, c: usize, coeff: Scalar) -> Form {
        let d = a + b + c;
        let mut f = Form::zero(d);
        f.coeffs[monomial_index(d, a, b)] = coeff;
        f
    }

    /// The linear form cx·x + cy·y + cz·z.
    pub fn linear(cx: i64, cy: i64, cz: i64) -> Form {
        let mut f = Form::zero(1);
        f.coeffs[monomial_index(1, 1, 0)] = scalar::from_int(cx);
        f.coeffs[monomial_index(1, 0, 1)] = scalar::from_int(cy);
        f.coeffs[monomial_index(1, 0, 0)] = scalar::from_int(cz);
        f
    }

    pub fn degree(&self) -> usize {
        self.degree
    }

    pub fn coeffs(&self) -> &[Scalar] {
        &self.coeffs
    }

    pub fn coeff_at(&self, a: usize, b: usize, c: usize) -> &Scalar {
        assert_eq!(a + b + c, self.degree, "exponents of the wrong degree");
        &self.coeffs[monomial_index(self.degree, a, b)]
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(|c| c.is_zero())
    }

    pub fn add(&self, rhs: &Form) -> Form {
        assert_eq!(self.degree, rhs.degree, "add requires equal degrees");
        Form {
            degree: self.degree,
            coeffs: self
                .coeffs
                .iter()
                .zip(&rhs.coeffs)
                .map(|(a, b)| a + b)
                .collect(),
        }
    }

    pub fn neg(&self) -> Form {
        Form {
            degree: self.degree,
            coeffs: self.coeffs.iter().map(|c| -c).collect(),
        }
    }

    pub fn scale(&self, s: &Scalar) -> Form {
        Form {
            degree: self.degree,
            coeffs: self.coeffs.iter().map(|c| c * s).collect(),
        }
    }

    pub fn multiply(&self, rhs: &Form) -> Form {
        let d = self.degree + rhs.degree;
        let mut out = Form::zero(d);
        let lb = MonomialBasis::new(self.degree);
        let rb = MonomialBasis::new(rhs.degree);
        for (i, ci) in self.coeffs.iter().enumerate() {
            if ci.is_zero() {
                continue;
            }
            let (a1, b1, _) = lb.entries()[i];
            for (j, cj) in rhs.coeffs.iter().enumerate() {
                if cj.is_zero() {
                    continue;
                }
                let (a2, b2, _) = rb.entries()[j];
                let idx = monomial_index(d, a1 + a2, b1 + b2);
                let cur = &out.coeffs[idx] + &(ci * cj);
                out.coeffs[idx] = cur;
            }
        }
        out
    }

    pub fn pow(&self, e: usize) -> Form {
        let mut acc = Form::monomial(0, 0, 0, Scalar::one());
        for _ in 0..e {
            acc = acc.multiply(self);
        }
        acc
    }

    /// The three partial derivatives, each of degree d−1.
    pub fn partials(&self) -> Result<(Form, Form, Form), FormError> {
        if self.degree == 0 {
            return Err(FormError::ConstantPartials);
        }
        let d = self.degree;
        let basis = MonomialBasis::new(d);
        let mut fx = Form::zero(d - 1);
        let mut fy = Form::zero(d - 1);
        let mut fz = Form::zero(d - 1);
        for (i, c) in self.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            let (a, b, cc) = basis.entries()[i];
            if a > 0 {
                let idx = monomial_index(d - 1, a - 1, b);
                fx.coeffs[idx] = c * &scalar::from_int(a as i64);
            }
            if b > 0 {
                let idx = monomial_index(d - 1, a, b - 1);
                fy.coeffs[idx] = c * &scalar::from_int(b as i64);
            }
            if cc > 0 {
                let idx = monomial_index(d - 1, a, b);
                fz.coeffs[idx] = c * &scalar::from_int(cc as i64);
            }
        }
        Ok((fx, fy, fz))
    }

    /// f(x^k, y^k, z^k), of degree k·d.
    pub fn substitute_powers(&self, k: usize) -> Form {
        assert!(k >= 1, "cover exponent must be positive");
        if k == 1 {
            return self.clone();
        }
        let d = self.degree * k;
        let basis = MonomialBasis::new(self.degree);
        let mut out = Form::zero(d);
        for (i, c) in self.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            let (a, b, _) = basis.entries()[i];
            out.coeffs[monomial_index(d, a * k, b * k)] = c.clone();
        }
        out
    }

    /// f(u, v, w) for three degree-1 forms: a linear change of coordinates
    /// when the substituted forms are independent. Degree is preserved.
    pub fn substitute_linear(&self, u: &Form, v: &Form, w: &Form) -> Form {
        assert!(
            u.degree == 1 && v.degree == 1 && w.degree == 1,
            "substitute_linear takes three degree-1 forms"
        );
        let d = self.degree;
        if d == 0 {
            return self.clone();
        }
        let pows = |g: &Form| {
            let mut t: Vec<Form> = Vec::with_capacity(d + 1);
            t.push(Form::from_coeffs(0, vec![Scalar::one()]));
            for i in 1..=d {
                let next = t[i - 1].multiply(g);
                t.push(next);
            }
            t
        };
        let (us, vs, ws) = (pows(u), pows(v), pows(w));
        let basis = MonomialBasis::new(d);
        let mut acc = Form::zero(d);
        for (i, c) in self.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            let (a, b, cc) = basis.entries()[i];
            let term = us[a].multiply(&vs[b]).multiply(&ws[cc]);
            acc = acc.add(&term.scale(c));
        }
        acc
    }

    /// Exact value at a rational point.
    pub fn evaluate(&self, p: &[Scalar; 3]) -> Scalar {
        let d = self.degree;
        let pow = |v: &Scalar| {
            let mut t = Vec::with_capacity(d + 1);
            t.push(Scalar::one());
            for i in 1..=d {
                let next = &t[i - 1] * v;
                t.push(next);
            }
            t
        };
        let (xs, ys, zs) = (pow(&p[0]), pow(&p[1]), pow(&p[2]));
        let basis = MonomialBasis::new(d);
        let mut acc = Scalar::zero();
        for (i, c) in self.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            let (a, b, cc) = basis.entries()[i];
            acc += c * &(&(&xs[a] * &ys[b]) * &zs[cc]);
        }
        acc
    }

    /// Coefficients cleared to a primitive integer vector (common
    /// denominator times inverse content). Spans the same curve.
    pub fn primitive_integer_coeffs(&self) -> Vec<BigInt> {
        scalar::primitive_integer_vector(&self.coeffs)
    }

    /// Canonical text rendering, parseable back when all coefficients are
    /// integers (the input grammar has no fraction syntax).
    pub fn render(&self) -> String {
        let basis = MonomialBasis::new(self.degree);
        let mut s = String::new();
        for (i, c) in self.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            let neg = c < &Scalar::zero();
            if s.is_empty() {
                if neg {
                    s.push('-');
                }
            } else {
                s.push_str(if neg { " - " } else { " + " });
            }
            let mag = if neg { -c } else { c.clone() };
            let (a, b, cc) = basis.entries()[i];
            let mut parts: Vec<String> = Vec::new();
            for (name, e) in [("x", a), ("y", b), ("z", cc)] {
                match e {
                    0 => {}
                    1 => parts.push(name.to_string()),
                    _ => parts.push(format!("{name}^{e}")),
                }
            }
            if parts.is_empty() {
                s.push_str(&scalar::render(&mag));
            } else {
                if !mag.is_one() {
                    s.push_str(&scalar::render(&mag));
                    s.push('*');
                }
                s.push_str(&parts.join("*"));
            }
        }
        if s.is_empty() {
            s.push('0');
        }
        s
    }
}

impl fmt::Display for Form {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.render())
    }
}

#[derive(Debug, thiserror::Error)]
pub enum FormError {
    #[error("cannot differentiate a degree-0 form")]
    ConstantPartials,
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalar::from_int;

    fn euler_holds(f: &Form) -> bool {
        let d = f.degree();
        let (fx, fy, fz) = f.partials().unwrap();
        let x = Form::monomial(1, 0, 0, Scalar::one());
        let y = Form::monomial(0, 1, 0, Scalar::one());
        let z = Form::monomial(0, 0, 1, Scalar::one());
        let lhs = x
            .multiply(&fx)
            .add(&y.multiply(&fy))
            .add(&z.multiply(&fz));
        lhs == f.scale(&from_int(d as i64))
    }

    #[test]
    fn basis_order_and_index_agree() {
        for d in 0..8 {
            let basis = MonomialBasis::new(d);
            assert_eq!(basis.len(), monomial_count(d));
            for (i, &(a, b, c)) in basis.entries().iter().enumerate() {
                assert_eq!(a + b + c, d);
                assert_eq!(monomial_index(d, a, b), i);
            }
            let mut sorted = basis.entries().to_vec();
            sorted.sort();
            assert_eq!(sorted, basis.entries());
        }
    }

    #[test]
    fn partial_derivative_examples() {
        let conic = parse_form("x^2+y^2+z^2").unwrap();
        let (fx, fy, fz) = conic.partials().unwrap();
        assert_eq!(fx, parse_form("2*x").unwrap());
        assert_eq!(fy, parse_form("2*y").unwrap());
        assert_eq!(fz, parse_form("2*z").unwrap());
        let f = parse_form("x^3*y").unwrap();
        let (fx, fy, fz) = f.partials().unwrap();
        assert_eq!(fx, parse_form("3*x^2*y").unwrap());
        assert_eq!(fy, parse_form("x^3").unwrap());
        assert!(fz.is_zero());
        assert_eq!(fz.degree(), 3);
        assert!(Form::monomial(0, 0, 0, from_int(5)).partials().is_err());
    }

    #[test]
    fn euler_identity_examples() {
        for text in [
            "x^2+y^2+z^2",
            "x*y*z*(x-y)*(x-z)*(y-z)",
            "x^3*y - 7*z^3*x + y^4",
        ] {
            let f = parse_form(text).unwrap();
            assert!(euler_holds(&f), "Euler identity failed for {text}");
        }
    }

    #[test]
    fn multiply_examples() {
        let f = parse_form("x^2 - 3*y*z + z^2").unwrap();
        let one = Form::monomial(0, 0, 0, Scalar::one());
        assert_eq!(f.multiply(&one), f);
        let x = parse_form("x").unwrap();
        let y = parse_form("y").unwrap();
        assert_eq!(x.multiply(&y), parse_form("x*y").unwrap());
        let dif = parse_form("x-y").unwrap();
        let sum = parse_form("x+y").unwrap();
        assert_eq!(dif.multiply(&sum), parse_form("x^2-y^2").unwrap());
        assert_eq!(dif.multiply(&sum), sum.multiply(&dif));
    }

    #[test]
    fn substitution_examples() {
        let f = parse_form("x+y+z").unwrap();
        assert_eq!(f.substitute_powers(1), f);
        assert_eq!(f.substitute_powers(2), parse_form("x^2+y^2+z^2").unwrap());
        let g = parse_form("x^2*y - z^3").unwrap();
        assert_eq!(
            g.substitute_powers(3),
            parse_form("x^6*y^3 - z^9").unwrap()
        );
    }

    #[test]
    fn linear_substitution_examples() {
        let f = parse_form("x^2 - y*z").unwrap();
        let id = f.substitute_linear(&Form::linear(1, 0, 0), &Form::linear(0, 1, 0), &Form::linear(0, 0, 1));
        assert_eq!(id, f);
        // swap x and y
        let sw = f.substitute_linear(&Form::linear(0, 1, 0), &Form::linear(1, 0, 0), &Form::linear(0, 0, 1));
        assert_eq!(sw, parse_form("y^2 - x*z").unwrap());
        // x -> x+y collapses x^2 - y^2 onto a product with a doubled cross term
        let g = parse_form("x^2 - y^2").unwrap();
        let sh = g.substitute_linear(&Form::linear(1, 1, 0), &Form::linear(0, 1, 0), &Form::linear(0, 0, 1));
        assert_eq!(sh, parse_form("x^2 + 2*x*y").unwrap());
    }

    #[test]
    fn evaluation_examples() {
        let at = |f: &Form, x: i64, y: i64, z: i64| {
            f.evaluate(&[from_int(x), from_int(y), from_int(z)])
        };
        assert_eq!(at(&parse_form("x").unwrap(), 1, 2, 3), from_int(1));
        let conic = parse_form("x^2+y^2+z^2").unwrap();
        assert_eq!(at(&conic, 1, 0, 0), from_int(1));
        let braid = parse_form("x*y*z*(x-y)*(x-z)*(y-z)").unwrap();
        assert_eq!(at(&braid, 1, 1, 1), from_int(0));
        assert_eq!(at(&braid, 1, 2, 3), from_int(6 * (-1) * (-2) * (-1)));
    }

    #[test]
    fn render_round_trip() {
        for text in [
            "x^2+y^2+z^2",
            "x*y*z*(x-y)*(x-z)*(y-z)",
            "-x^3 + 2*x*y*z - 7*z^3",
            "5",
            "x",
        ] {
            let f = parse_form(text).unwrap();
            assert_eq!(parse_form(&f.render()).unwrap(), f, "round trip of {text}");
        }
        assert_eq!(Form::zero(4).render(), "0");
    }

    #[test]
    fn primitive_coefficients() {
        let mut f = parse_form("2*x^2 + 4*y^2").unwrap();
        f = f.scale(&crate::scalar::ratio(1, 6));
        let ints = f.primitive_integer_coeffs();
        let nonzero: Vec<i64> = ints
            .iter()
            .filter(|v| !v.is_zero())
            .map(|v| i64::try_from(v).unwrap())
            .collect();
        assert_eq!(nonzero, vec![2, 1]); // basis order: y^2 before x^2
    }
}
