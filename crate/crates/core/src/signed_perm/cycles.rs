//! Cycle notation for signed permutations.
//!
//! Grammar (whitespace is ignored):
//!
//! ```text
//! CYCLES := CYCLE+
//! CYCLE  := '(' INT (',' INT)* ')'
//! INT    := '-'? [1-9][0-9]*
//! ```
//!
//! The identity is spelled `()` or `id`. A cycle `C` whose mirror `-C` is not
//! written out gets it added automatically, so `(1,2,3,5)(4,-6)` denotes
//! `(1,2,3,5)(4,-6)(-1,-2,-3,-5)(-4,6)`.

use std::fmt;

use super::SignedPermutation;
use crate::error::{Error, Result};
use crate::point;

impl SignedPermutation {
    /// Parses cycle notation for an element of `B_n`.
    pub fn parse(text: &str, n: usize) -> Result<Self> {
        if n == 0 {
            return Err(Error::Parse("rank must be positive".into()));
        }
        let compact: String = text.chars().filter(|c| !c.is_whitespace()).collect();
        if compact == "()" || compact == "id" {
            return Ok(Self::identity(n));
        }
        let cycles = parse_cycles(&compact)?;
        from_cycle_lists(n, &cycles, true)
    }

    /// Cycle notation with each mirror pair `C, -C` written once as
    /// `((C))`; self-mirrored cycles keep single brackets.
    pub fn double_bracket(&self) -> String {
        let cycles: Vec<_> = self.cycles().into_iter().filter(|c| c.len() > 1).collect();
        if cycles.is_empty() {
            return "id".into();
        }
        let mut out = String::new();
        for c in &cycles {
            let self_mirror = c.contains(&-c[0]);
            if self_mirror {
                out.push_str(&format!("({})", join(c)));
            } else if c[0] > 0 {
                out.push_str(&format!("(({}))", join(c)));
            }
        }
        out
    }
}

fn join(c: &[i32]) -> String {
    c.iter().map(i32::to_string).collect::<Vec<_>>().join(",")
}

impl fmt::Display for SignedPermutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut any = false;
        for c in self.cycles().into_iter().filter(|c| c.len() > 1) {
            write!(f, "({})", join(&c))?;
            any = true;
        }
        if !any {
            write!(f, "id")?;
        }
        Ok(())
    }
}

fn parse_cycles(s: &str) -> Result<Vec<Vec<i32>>> {
    let mut cycles = Vec::new();
    let mut rest = s;
    if rest.is_empty() {
        return Err(Error::Parse("empty input".into()));
    }
    while !rest.is_empty() {
        let body = rest
            .strip_prefix('(')
            .ok_or_else(|| Error::Parse(format!("expected '(' at {rest:?}")))?;
        let close = body
            .find(')')
            .ok_or_else(|| Error::Parse("unclosed '('".into()))?;
        let inner = &body[..close];
        let cycle = inner
            .split(',')
            .map(parse_int)
            .collect::<Result<Vec<_>>>()?;
        cycles.push(cycle);
        rest = &body[close + 1..];
    }
    Ok(cycles)
}

fn parse_int(tok: &str) -> Result<i32> {
    let digits = tok.strip_prefix('-').unwrap_or(tok);
    let valid = !digits.is_empty()
        && digits.chars().all(|c| c.is_ascii_digit())
        && !digits.starts_with('0');
    if !valid {
        return Err(Error::Parse(format!("bad integer {tok:?}")));
    }
    tok.parse()
        .map_err(|_| Error::Parse(format!("integer out of range {tok:?}")))
}

/// Assembles a signed permutation from disjoint cycles, optionally adding
/// missing mirror cycles.
pub(super) fn from_cycle_lists(
    n: usize,
    cycles: &[Vec<i32>],
    complete_mirrors: bool,
) -> Result<SignedPermutation> {
    let mut map: Vec<Option<i32>> = vec![None; 2 * n];
    for c in cycles {
        if c.is_empty() {
            return Err(Error::Parse("empty cycle".into()));
        }
        for (k, &x) in c.iter().enumerate() {
            if x == 0 || x.unsigned_abs() as usize > n {
                return Err(Error::Parse(format!("point {x} outside {{±1,…,±{n}}}")));
            }
            let slot = &mut map[point::index(x, n)];
            if slot.is_some() {
                return Err(Error::Parse(format!("point {x} occurs twice")));
            }
            *slot = Some(c[(k + 1) % c.len()]);
        }
    }
    if complete_mirrors {
        for c in cycles {
            if c.iter().all(|&x| map[point::index(-x, n)].is_none()) {
                for (k, &x) in c.iter().enumerate() {
                    map[point::index(-x, n)] = Some(-c[(k + 1) % c.len()]);
                }
            }
        }
    }
    for i in 0..2 * n {
        let x = point::at(i, n);
        let here = map[i].unwrap_or(x);
        let mirror = map[point::index(-x, n)].unwrap_or(-x);
        if mirror != -here {
            return Err(Error::Parse(format!(
                "cycles conflict with their mirrors at point {x}"
            )));
        }
    }
    SignedPermutation::from_images(
        (1..=n as i32)
            .map(|x| map[point::index(x, n)].unwrap_or(x))
            .collect(),
    )
}
