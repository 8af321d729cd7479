//! Text formats for rings, orders and command-line vector lists.
//!
//! Ring file:
//! ```text
//! ring k d_1 ... d_k
//! mul i j c_1 ... c_k     # 1-based, i <= j; missing pairs multiply to zero
//! one c_1 ... c_k
//! ```
//! Order file:
//! ```text
//! order n
//! mul i j c_1 ... c_n     # 2 <= i <= j; products with b_1 are implied
//! ideal g; g; ...         # optional default ideals
//! ```

use std::sync::Arc;

use num_bigint::BigInt;
use num_traits::ToPrimitive;

use crate::config::Limits;
use crate::error::{Error, Result};
use crate::order::{validate_order, Order, OrderPresentation};
use crate::ring::{validate_ring, FiniteRing, RingPresentation};

fn perr(line: usize, message: impl Into<String>) -> Error {
    Error::Parse {
        line,
        message: message.into(),
    }
}

/// Non-empty lines with comments stripped, numbered from 1.
fn lines(text: &str) -> impl Iterator<Item = (usize, Vec<&str>)> {
    text.lines().enumerate().filter_map(|(i, l)| {
        let l = l.split('#').next().unwrap_or("");
        let words: Vec<&str> = l.split_whitespace().collect();
        (!words.is_empty()).then_some((i + 1, words))
    })
}

fn ints<T: std::str::FromStr>(line: usize, words: &[&str]) -> Result<Vec<T>> {
    words
        .iter()
        .map(|w| w.parse().map_err(|_| perr(line, format!("not an integer: {w}"))))
        .collect()
}

fn pair_index(line: usize, i: usize, j: usize, lo: usize, n: usize) -> Result<(usize, usize)> {
    if i < lo || j < i || j > n {
        return Err(perr(line, format!("basis pair ({i}, {j}) out of range")));
    }
    Ok((i - 1, j - 1))
}

pub fn parse_ring(text: &str, limits: &Limits) -> Result<Arc<FiniteRing>> {
    let mut it = lines(text);
    let (l0, head) = it.next().ok_or_else(|| perr(1, "empty ring description"))?;
    if head[0] != "ring" || head.len() < 2 {
        return Err(perr(l0, "expected `ring k d_1 ... d_k`"));
    }
    let k: usize = ints(l0, &head[1..2])?[0];
    let d: Vec<u64> = ints(l0, &head[2..])?;
    if d.len() != k {
        return Err(perr(l0, format!("expected {k} invariant factors, got {}", d.len())));
    }
    let mut products = Vec::new();
    let mut unit = None;
    for (ln, words) in it {
        match words[0] {
            "mul" => {
                let v: Vec<u64> = ints(ln, &words[1..])?;
                if v.len() != k + 2 {
                    return Err(perr(ln, format!("`mul` needs 2 indices and {k} coordinates")));
                }
                let (i, j) = pair_index(ln, v[0] as usize, v[1] as usize, 1, k)?;
                products.push((i, j, v[2..].to_vec()));
            }
            "one" => {
                let v: Vec<u64> = ints(ln, &words[1..])?;
                if v.len() != k {
                    return Err(perr(ln, format!("`one` needs {k} coordinates")));
                }
                unit = Some(v);
            }
            w => return Err(perr(ln, format!("unknown directive `{w}`"))),
        }
    }
    let unit = unit.ok_or_else(|| perr(l0, "missing `one` line"))?;
    let mut p = RingPresentation::zero_products(d, unit);
    for (i, j, c) in products {
        p.set_product(i, j, c);
    }
    Ok(Arc::new(validate_ring(p, limits)?))
}

/// An order together with the ideals listed in its file.
#[derive(Debug, Clone)]
pub struct OrderFile {
    pub order: Order,
    pub ideals: Vec<Vec<Vec<BigInt>>>,
}

pub fn parse_order(text: &str, limits: &Limits) -> Result<OrderFile> {
    let mut it = lines(text);
    let (l0, head) = it.next().ok_or_else(|| perr(1, "empty order description"))?;
    if head[0] != "order" || head.len() != 2 {
        return Err(perr(l0, "expected `order n`"));
    }
    let n: usize = ints(l0, &head[1..])?[0];
    if n > limits.max_order_rank {
        return Err(Error::RankTooLarge {
            rank: n,
            bound: limits.max_order_rank,
        });
    }
    let mut p = OrderPresentation::identity_table(n);
    let mut ideals = Vec::new();
    for (ln, words) in it {
        match words[0] {
            "mul" => {
                let v: Vec<BigInt> = ints(ln, &words[1..])?;
                if v.len() != n + 2 {
                    return Err(perr(ln, format!("`mul` needs 2 indices and {n} coordinates")));
                }
                let idx = |x: &BigInt| x.to_usize().unwrap_or(0);
                let (i, j) = pair_index(ln, idx(&v[0]), idx(&v[1]), 2, n)?;
                p.set_product(i, j, v[2..].to_vec());
            }
            "ideal" => {
                let rest = words[1..].join(" ");
                ideals.push(parse_vectors(&rest).map_err(|e| perr(ln, e.to_string()))?);
            }
            w => return Err(perr(ln, format!("unknown directive `{w}`"))),
        }
    }
    Ok(OrderFile {
        order: validate_order(p, limits)?,
        ideals,
    })
}

/// `"1 0; 0,2"` becomes `[[1, 0], [0, 2]]`. Coordinates are separated by
/// spaces or commas, vectors by semicolons.
pub fn parse_vectors(s: &str) -> Result<Vec<Vec<BigInt>>> {
    let out: Vec<Vec<BigInt>> = s
        .split(';')
        .map(str::trim)
        .filter(|v| !v.is_empty())
        .map(|v| {
            let words: Vec<&str> = v
                .split(|c: char| c == ',' || c.is_whitespace())
                .filter(|w| !w.is_empty())
                .collect();
            ints(0, &words)
        })
        .collect::<Result<_>>()?;
    if out.is_empty() {
        return Err(perr(0, "no vectors given"));
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn ring_file() {
        let text = "# F2[x,y]/(x^2,y^2)\nring 4 2 2 2 2\nmul 1 1 1 0 0 0\nmul 1 2 0 1 0 0\nmul 1 3 0 0 1 0\nmul 1 4 0 0 0 1\nmul 2 3 0 0 0 1\none 1 0 0 0\n";
        let r = parse_ring(text, &Limits::default()).unwrap();
        assert_eq!(r.order(), 16);
        assert!(matches!(
            parse_ring("ring 1 6\n", &Limits::default()),
            Err(Error::Parse { .. })
        ));
        assert!(matches!(
            parse_ring("ring 1 6\nmul 1 2 1\none 1", &Limits::default()),
            Err(Error::Parse { line: 2, .. })
        ));
    }

    #[test]
    fn order_file() {
        let f = parse_order("order 2\nmul 2 2 -4 0\nideal 2 0\nideal 2 1; 4,0\n", &Limits::default()).unwrap();
        assert_eq!(f.order.rank(), 2);
        assert_eq!(f.ideals.len(), 2);
        assert_eq!(f.ideals[1][1], vec![BigInt::from(4), BigInt::from(0)]);
    }

    #[test]
    fn vectors() {
        let v = parse_vectors(" 1 0 ; 0,-2 ").unwrap();
        assert_eq!(v, vec![vec![1.into(), 0.into()], vec![0.into(), (-2).into()]]);
        assert!(parse_vectors(";").is_err());
        assert!(parse_vectors("x").is_err());
    }
}
