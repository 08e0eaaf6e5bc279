//! LaTeX rendering of a model over `Q(T)`.

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

use super::model::NormalizedModel;
use crate::algebra::{Poly, RatFunc, Rational};

fn int_poly_latex(cs: &[BigInt], var: &str) -> String {
    let mut s = String::new();
    for (k, c) in cs.iter().enumerate().rev() {
        if c.is_zero() {
            continue;
        }
        let abs = c.abs();
        if s.is_empty() {
            if c.is_negative() {
                s.push('-');
            }
        } else {
            s.push_str(if c.is_negative() { " - " } else { " + " });
        }
        let coef = if abs.is_one() && k > 0 { String::new() } else { abs.to_string() };
        let mono = match k {
            0 => String::new(),
            1 => var.to_string(),
            _ => format!("{var}^{{{k}}}"),
        };
        s.push_str(&coef);
        s.push_str(&mono);
    }
    if s.is_empty() {
        s.push('0');
    }
    s
}

/// `p = c * prim` with `prim` a primitive integer polynomial.
fn split_content(p: &Poly) -> (Rational, Vec<BigInt>) {
    let prim = p.primitive_integer();
    let lead = prim.last().cloned().unwrap_or_else(BigInt::one);
    (p.leading() / Rational::from_integer(lead), prim)
}

fn wrap(body: String, terms: usize) -> String {
    if terms > 1 {
        format!("({body})")
    } else {
        body
    }
}

fn nonzero_terms(cs: &[BigInt]) -> usize {
    cs.iter().filter(|c| !c.is_zero()).count()
}

pub fn ratfunc_latex(r: &RatFunc, var: &str) -> String {
    if r.numerator().is_zero() {
        return "0".into();
    }
    let (cn, pn) = split_content(r.numerator());
    let (cd, pd) = split_content(r.denominator());
    let c = cn / cd;
    let sign = if c.is_negative() { "-" } else { "" };
    let c = c.abs();
    let num_body = int_poly_latex(&pn, var);
    let den_body = int_poly_latex(&pd, var);
    let num = if c.numer().is_one() {
        num_body
    } else if pn.len() == 1 {
        format!("{}", c.numer() * &pn[0])
    } else {
        format!("{}{}", c.numer(), wrap(num_body, nonzero_terms(&pn)))
    };
    let den_is_one = pd.len() == 1 && pd[0].is_one();
    if den_is_one && c.denom().is_one() {
        return format!("{sign}{num}");
    }
    let den = if den_is_one {
        c.denom().to_string()
    } else if c.denom().is_one() {
        den_body
    } else {
        format!("{}{}", c.denom(), wrap(den_body, nonzero_terms(&pd)))
    };
    format!("{sign}\\frac{{{num}}}{{{den}}}")
}

/// Monic polynomial in `X` with coefficients in `Q(T)`.
pub fn poly_latex(coeffs: &[RatFunc]) -> String {
    let mut s = String::new();
    for (k, c) in coeffs.iter().enumerate().rev() {
        if c.numerator().is_zero() {
            continue;
        }
        let mono = match k {
            0 => String::new(),
            1 => "X".into(),
            _ => format!("X^{{{k}}}"),
        };
        let body = if c.is_one() && k > 0 {
            mono
        } else {
            let t = ratfunc_latex(c, "T");
            let t = if t.contains(['+', ' ']) && !t.starts_with("\\frac") && k > 0 { format!("({t})") } else { t };
            format!("{t}{mono}")
        };
        if s.is_empty() {
            s.push_str(&body);
        } else if let Some(rest) = body.strip_prefix('-') {
            s.push_str(" - ");
            s.push_str(rest);
        } else {
            s.push_str(" + ");
            s.push_str(&body);
        }
    }
    s
}

/// Displays of `S_n`, `S_n - 1`, `S_n - H_n` and `H_n`.
pub fn model_latex(m: &NormalizedModel<RatFunc>) -> String {
    let n = m.n;
    let den = format!("{} \\left({}\\right)", wrap_gamma(&m.gamma), poly_latex(&m.pole_poly()));
    let mut out = String::new();
    out.push_str(&format!(
        "S_{{{n}}}(T, X) = \\frac{{\\left({}\\right)^2}}{{{den}}}\n\n",
        poly_latex(&m.a_poly())
    ));
    out.push_str(&format!(
        "S_{{{n}}}(T, X) - 1 = \\frac{{(X - 1)^3 \\left({}\\right)}}{{{den}}}\n\n",
        poly_latex(&m.d_poly())
    ));
    out.push_str(&format!(
        "S_{{{n}}}(T, X) - H_{{{n}}}(T) = \\frac{{\\left({}\\right) \\left({}\\right)^2}}{{{den}}}\n\n",
        poly_latex(&m.q_poly()),
        poly_latex(&m.e_poly())
    ));
    out.push_str(&format!("H_{{{n}}}(T) = {}\n", ratfunc_latex(&m.lambda, "T")));
    out
}

fn wrap_gamma(g: &RatFunc) -> String {
    format!("\\left({}\\right)", ratfunc_latex(g, "T"))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::family::reference;

    #[test]
    fn renders_published_coefficients() {
        assert_eq!(
            ratfunc_latex(&reference::beta0(), "T"),
            "\\frac{25T^{3} + 120T^{2} + 192T + 128}{12(3T + 8)}"
        );
        assert_eq!(
            ratfunc_latex(&reference::gamma(), "T"),
            "\\frac{3(15625T^{3} + 105000T^{2} + 235200T + 175616)}{256(3T + 8)}"
        );
        let text = model_latex(&reference::n6_model());
        assert!(text.contains("H_{6}(T) = -\\frac{"));
        assert!(text.starts_with("S_{6}(T, X) = "));
    }
}
