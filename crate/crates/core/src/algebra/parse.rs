//! Reader for the printed grammar: generators `a`, bulleted `a.` (or `a•`),
//! powers `^n`, juxtaposition for products, and `+`/`-` with integer
//! coefficients for sums. Spaces between factors are optional when letter
//! names do not run together.

use super::{Coeff, Group, GroupRing};
use crate::error::{parse_err, Result};

#[derive(Debug, Clone, PartialEq)]
enum Tok {
    Letter(usize),
    Bullet,
    Pow(i64),
    Int(i64),
    Plus,
    Minus,
}

fn lex<G: Group>(grp: &G, text: &str) -> Result<Vec<(Tok, usize)>> {
    let t = grp.table();
    let names: Vec<&str> = (0..t.letter_count()).map(|a| t.letter_name(a)).collect();
    let mut out = Vec::new();
    let mut i = 0;
    let b = text.as_bytes();
    while i < text.len() {
        let rest = &text[i..];
        let c = rest.chars().next().unwrap();
        let col = text[..i].chars().count() + 1;
        if c.is_whitespace() {
            i += c.len_utf8();
            continue;
        }
        if let Some(a) = (0..names.len()).filter(|&a| rest.starts_with(names[a])).max_by_key(|&a| names[a].len()) {
            out.push((Tok::Letter(a), col));
            i += names[a].len();
            continue;
        }
        match c {
            '.' | '•' => {
                out.push((Tok::Bullet, col));
                i += c.len_utf8();
            }
            '+' => {
                out.push((Tok::Plus, col));
                i += 1;
            }
            '-' | '−' => {
                out.push((Tok::Minus, col));
                i += c.len_utf8();
            }
            '^' => {
                let mut j = i + 1;
                if j < b.len() && b[j] == b'-' {
                    j += 1;
                }
                let start = j;
                while j < b.len() && b[j].is_ascii_digit() {
                    j += 1;
                }
                if start == j {
                    return Err(parse_err(1, col, "expected an exponent after `^`"));
                }
                let n: i64 = text[i + 1..j].parse().map_err(|_| parse_err(1, col, "bad exponent"))?;
                out.push((Tok::Pow(n), col));
                i = j;
            }
            d if d.is_ascii_digit() => {
                let mut j = i;
                while j < b.len() && b[j].is_ascii_digit() {
                    j += 1;
                }
                let n: i64 = text[i..j].parse().map_err(|_| parse_err(1, col, "integer too large"))?;
                out.push((Tok::Int(n), col));
                i = j;
            }
            _ => return Err(parse_err(1, col, format!("unexpected `{c}`"))),
        }
    }
    Ok(out)
}

/// Consume a run of factors starting at `k`; returns the product and the new index.
fn factors<G: Group>(grp: &G, toks: &[(Tok, usize)], mut k: usize) -> Result<(G::Elem, usize, bool)> {
    let mut acc = grp.identity();
    let mut any = false;
    while let Some((Tok::Letter(a), col)) = toks.get(k) {
        let mut bullet = false;
        k += 1;
        if let Some((Tok::Bullet, _)) = toks.get(k) {
            bullet = true;
            k += 1;
        }
        let mut e = 1;
        if let Some((Tok::Pow(n), _)) = toks.get(k) {
            e = *n;
            k += 1;
        }
        let g = grp
            .generator(*a, bullet)
            .ok_or_else(|| parse_err(1, *col, "this group has no bulleted generators"))?;
        acc = grp.mul(&acc, &grp.pow(&g, e));
        any = true;
    }
    Ok((acc, k, any))
}

/// Parse a single group element; `1` is the identity.
pub fn parse_element<G: Group>(grp: &G, text: &str) -> Result<G::Elem> {
    let toks = lex(grp, text)?;
    if let [(Tok::Int(1), _)] = toks.as_slice() {
        return Ok(grp.identity());
    }
    let (g, k, any) = factors(grp, &toks, 0)?;
    if k != toks.len() || !any {
        let col = toks.get(k).map(|t| t.1).unwrap_or(1);
        return Err(parse_err(1, col, "expected a product of generators"));
    }
    Ok(g)
}

/// Parse a formal sum such as `2 - b a - a. b. + b a a. b.`.
pub fn parse_ring<G: Group, C: Coeff>(grp: &G, text: &str) -> Result<GroupRing<G::Elem, C>> {
    let toks = lex(grp, text)?;
    let mut out = GroupRing::zero();
    if let [(Tok::Int(0), _)] = toks.as_slice() {
        return Ok(out);
    }
    let mut k = 0;
    let mut first = true;
    while k < toks.len() || first {
        let mut sign = 1;
        match toks.get(k) {
            Some((Tok::Plus, _)) if !first => k += 1,
            Some((Tok::Minus, _)) => {
                sign = -1;
                k += 1;
            }
            _ if first => {}
            Some((_, col)) => return Err(parse_err(1, *col, "expected `+` or `-`")),
            None => break,
        }
        first = false;
        let mut coef = 1;
        let mut had_int = false;
        if let Some((Tok::Int(n), _)) = toks.get(k) {
            coef = *n;
            had_int = true;
            k += 1;
        }
        let (g, nk, any) = factors(grp, &toks, k)?;
        if !any && !had_int {
            let col = toks.get(k).map(|t| t.1).unwrap_or(text.chars().count() + 1);
            return Err(parse_err(1, col, "expected a term"));
        }
        k = nk;
        out.add_term(g, C::from_i64(sign * coef));
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::{OrbitTable, PiAb, PsiGroup};
    use crate::alphabet::AlphabetSpec;

    #[test]
    fn round_trip_lambda() {
        let spec = AlphabetSpec::new(&["a", "A", "b", "B"], &[("a", "A"), ("b", "B")], &[], None).unwrap();
        let g = PsiGroup::new(OrbitTable::new(&spec));
        let spaced: GroupRing<_, i64> = parse_ring(&g, "a b a. b. + a - a b b. + b. - a a. b.").unwrap();
        let tight: GroupRing<_, i64> = parse_ring(&g, "aba.b.+a-abb.+b.-aa.b.").unwrap();
        assert_eq!(spaced, tight);
        assert_eq!(spaced.len(), 5);
        let back: GroupRing<_, i64> = parse_ring(&g, &spaced.render(&g)).unwrap();
        assert_eq!(back, spaced);
        let inv = parse_element(&g, "A").unwrap();
        assert_eq!(inv, parse_element(&g, "a^-1").unwrap());
        assert_eq!(parse_element(&g, "a.^2").unwrap().syllables(), &[(0, 0, 2)]);
    }

    #[test]
    fn coefficients_and_errors() {
        let spec = AlphabetSpec::new(&["a", "b"], &[], &["a", "b"], None).unwrap();
        let g = PsiGroup::new(OrbitTable::new(&spec));
        let x: GroupRing<_, i64> = parse_ring(&g, "2 - b a - a. b. + b a a. b.").unwrap();
        assert_eq!(x.coeff(&g.identity()), 2);
        assert!(parse_ring::<_, i64>(&g, "a +").is_err());
        assert!(parse_element(&g, "a q").is_err());
        let p = PiAb::new(OrbitTable::new(&spec));
        assert!(parse_element(&p, "a.").is_err());
        assert!(parse_ring::<_, i64>(&p, "0").unwrap().is_zero());
    }
}
