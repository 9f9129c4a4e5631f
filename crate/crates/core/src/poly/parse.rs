use super::monomial::Monomial;
use super::polynomial::Polynomial;
use super::PolyError;
use crate::scalar::Coeff;

/// Parse the canonical text form, e.g. `3*x1^2*x2 - x3`.
///
/// A polynomial is a signed sum of products; each factor is a coefficient
/// (`7` or `7/2`) or a variable name with an optional `^exponent`.
pub fn parse_polynomial<C: Coeff>(text: &str, names: &[String]) -> Result<Polynomial<C>, PolyError> {
    let nvars = names.len();
    let err = |msg: &str| PolyError::Parse(format!("{msg} in {text:?}"));
    let mut out = Polynomial::zero(nvars);
    let mut rest = text.trim();
    if rest.is_empty() {
        return Err(err("empty input"));
    }
    let mut negative = false;
    let mut first = true;
    loop {
        if let Some(r) = rest.strip_prefix('-') {
            negative = !negative;
            rest = r.trim_start();
        } else if let Some(r) = rest.strip_prefix('+') {
            if first {
                return Err(err("leading '+'"));
            }
            rest = r.trim_start();
        } else if !first {
            return Err(err("expected '+' or '-'"));
        }
        let end = rest.find(['+', '-']).unwrap_or(rest.len());
        let (term, tail) = rest.split_at(end);
        let (m, mut c) = parse_term::<C>(term.trim(), names).map_err(|m| err(&m))?;
        if negative {
            c = -c;
        }
        out.add_term(m, c);
        rest = tail.trim_start();
        if rest.is_empty() {
            return Ok(out);
        }
        negative = false;
        first = false;
    }
}

fn parse_term<C: Coeff>(term: &str, names: &[String]) -> Result<(Monomial, C), String> {
    if term.is_empty() {
        return Err("empty term".into());
    }
    let mut mono = Monomial::ONE;
    let mut coeff = C::one();
    for factor in term.split('*') {
        let factor = factor.trim();
        if factor.is_empty() {
            return Err("empty factor".into());
        }
        if factor.starts_with(|c: char| c.is_ascii_digit()) {
            let c = C::parse_coeff(factor).ok_or_else(|| format!("bad coefficient {factor:?}"))?;
            coeff *= &c;
            continue;
        }
        let (name, exp) = match factor.split_once('^') {
            Some((n, e)) => {
                let e: u32 = e.trim().parse().map_err(|_| format!("bad exponent {e:?}"))?;
                (n.trim(), e)
            }
            None => (factor, 1),
        };
        let idx = names
            .iter()
            .position(|n| n == name)
            .ok_or_else(|| format!("unknown variable {name:?}"))?;
        let e = mono.exp(idx) + exp;
        if e > u8::MAX as u32 {
            return Err("exponent exceeds 255".into());
        }
        mono.set(idx, e);
    }
    Ok((mono, coeff))
}
