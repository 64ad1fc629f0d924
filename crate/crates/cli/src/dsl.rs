//! Text syntax for towers and multisegments.
//!
//! ```text
//! tower := 'tower' '(' 'o0' '=' (INT | 'inf') ',' 'l' '=' INT ')'
//! mult  := '0' | term ('+' term)*
//! term  := (INT '*')? '[' INT ',' INT ']' '@' ('sc' | 'c' INT)
//! ```
//!
//! Whitespace between tokens is ignored. Every error carries the byte offset
//! at which it was detected.

use std::fmt;

use mseg_core::{Cardinal, Level, Multisegment, Segment, Tower};

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ParseError {
    pub position: usize,
    pub message: String,
}

impl fmt::Display for ParseError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "at position {}: {}", self.position, self.message)
    }
}

impl std::error::Error for ParseError {}

type Parsed<T> = Result<T, ParseError>;

struct Cursor<'a> {
    text: &'a str,
    pos: usize,
}

impl<'a> Cursor<'a> {
    fn new(text: &'a str) -> Self {
        Cursor { text, pos: 0 }
    }

    fn fail<T>(&self, at: usize, message: impl Into<String>) -> Parsed<T> {
        Err(ParseError {
            position: at,
            message: message.into(),
        })
    }

    fn skip_ws(&mut self) {
        let rest = &self.text[self.pos..];
        self.pos += rest.len() - rest.trim_start().len();
    }

    fn peek(&mut self) -> Option<char> {
        self.skip_ws();
        self.text[self.pos..].chars().next()
    }

    fn at_end(&mut self) -> bool {
        self.peek().is_none()
    }

    fn eat(&mut self, token: &str) -> bool {
        self.skip_ws();
        if self.text[self.pos..].starts_with(token) {
            self.pos += token.len();
            true
        } else {
            false
        }
    }

    fn expect(&mut self, token: &str) -> Parsed<()> {
        if self.eat(token) {
            Ok(())
        } else {
            let found = self.peek().map_or("end of input".to_string(), |c| format!("'{c}'"));
            self.fail(self.pos, format!("expected '{token}', found {found}"))
        }
    }

    fn int(&mut self) -> Parsed<(i64, usize)> {
        self.skip_ws();
        let start = self.pos;
        let bytes = self.text.as_bytes();
        let mut end = start;
        if end < bytes.len() && bytes[end] == b'-' {
            end += 1;
        }
        let digits = end;
        while end < bytes.len() && bytes[end].is_ascii_digit() {
            end += 1;
        }
        if end == digits {
            return self.fail(start, "expected an integer");
        }
        match self.text[start..end].parse() {
            Ok(v) => {
                self.pos = end;
                Ok((v, start))
            }
            Err(_) => self.fail(start, "integer out of range"),
        }
    }

    fn natural(&mut self) -> Parsed<(u64, usize)> {
        let (v, at) = self.int()?;
        if v < 0 {
            return self.fail(at, "expected a non-negative integer");
        }
        Ok((v as u64, at))
    }

    fn finish(&mut self) -> Parsed<()> {
        if self.at_end() {
            Ok(())
        } else {
            self.fail(self.pos, "unexpected trailing input")
        }
    }
}

pub fn parse_tower(text: &str) -> Parsed<Tower> {
    let mut c = Cursor::new(text);
    c.expect("tower")?;
    c.expect("(")?;
    c.expect("o0")?;
    c.expect("=")?;
    let o_at = c.pos;
    let o0 = if c.eat("inf") {
        Cardinal::Infinite
    } else {
        let (v, at) = c.natural()?;
        if v == 0 {
            return c.fail(at, "o0 must be positive");
        }
        Cardinal::Finite(v)
    };
    c.expect(",")?;
    c.expect("l")?;
    c.expect("=")?;
    let (ell, ell_at) = c.natural()?;
    c.expect(")")?;
    c.finish()?;
    Tower::from_params(o0, ell).map_err(|e| ParseError {
        position: if ell == 0 || !mseg_core::params::is_prime(ell) { ell_at } else { o_at },
        message: e.to_string(),
    })
}

pub fn parse_segment(text: &str, tower: &Tower) -> Parsed<Segment> {
    let mut c = Cursor::new(text);
    let (segment, mult) = term(&mut c, tower)?;
    c.finish()?;
    if mult != 1 {
        return c.fail(0, "a single segment takes no multiplicity");
    }
    Ok(segment)
}

/// Parses a multisegment and returns it in canonical form.
pub fn parse_multisegment(text: &str, tower: &Tower) -> Parsed<Multisegment> {
    let mut c = Cursor::new(text);
    let mut m = Multisegment::zero(*tower);
    if c.peek() == Some('0') && c.text[c.pos..].trim() == "0" {
        return Ok(m);
    }
    loop {
        let (segment, mult) = term(&mut c, tower)?;
        m.insert(segment, mult);
        if c.at_end() {
            return Ok(m);
        }
        c.expect("+")?;
    }
}

fn term(c: &mut Cursor<'_>, tower: &Tower) -> Parsed<(Segment, u64)> {
    let mut mult = 1;
    if c.peek() != Some('[') {
        let (k, at) = c.natural()?;
        if k == 0 {
            return c.fail(at, "multiplicity must be positive");
        }
        mult = k;
        c.expect("*")?;
    }
    let open = c.pos;
    c.expect("[")?;
    let (a, _) = c.int()?;
    c.expect(",")?;
    let (b, _) = c.int()?;
    c.expect("]")?;
    if a > b {
        return c.fail(open, format!("segment [{a},{b}] has a > b"));
    }
    c.expect("@")?;
    let level_at = c.pos;
    let level = if c.eat("sc") {
        Level::Sc
    } else if c.eat("c") {
        let (r, at) = c.natural()?;
        let r = u32::try_from(r).or_else(|_| c.fail(at, "level out of range"))?;
        Level::Cusp(r)
    } else {
        return c.fail(c.pos, "expected a level 'sc' or 'c<r>'");
    };
    let line = match tower.line(level) {
        Ok(line) => line,
        Err(e) => return c.fail(level_at, format!("level {level} on {tower}: {e}")),
    };
    let segment = Segment::new(&line, level, a, b).or_else(|e| c.fail(open, e.to_string()))?;
    Ok((segment, mult))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn tower(o0: u64, l: u64) -> Tower {
        Tower::from_params(Cardinal::Finite(o0), l).unwrap()
    }

    #[test]
    fn towers() {
        assert_eq!(parse_tower("tower(o0=1, l=2)").unwrap(), tower(1, 2));
        assert_eq!(parse_tower(" tower( o0 = 3 ,l=2 ) ").unwrap(), tower(3, 2));
        let t = parse_tower("tower(o0=inf, l=0)").unwrap();
        assert_eq!(t.ell(), 0);
        assert_eq!(parse_tower("tower(o0=1, l=4)").unwrap_err().position, 14);
        assert!(parse_tower("tower(o0=inf, l=2)").is_err());
        assert!(parse_tower("tower(o0=0, l=2)").is_err());
        assert_eq!(parse_tower("tower(o0=1, l=2) x").unwrap_err().position, 17);
    }

    #[test]
    fn ledger_of_mixed_levels() {
        let t = tower(1, 2);
        let m = parse_multisegment("2*[0,0]@sc + [1,1]@c0", &t).unwrap();
        let got: Vec<(String, u64)> = m.iter().map(|(s, k)| (s.to_string(), *k)).collect();
        assert_eq!(got, vec![("[0,0]@sc".into(), 2), ("[0,0]@c0".into(), 1)]);
    }

    #[test]
    fn start_is_reduced_modulo_the_order() {
        let m = parse_multisegment("[2,5]@sc", &tower(3, 2)).unwrap();
        let (s, k) = m.iter().next().unwrap();
        assert_eq!((s.start(), s.len(), *k), (2, 4, 1));
        let m = parse_multisegment("[4,4]@sc", &tower(3, 2)).unwrap();
        assert_eq!(m.to_string(), "[1,1]@sc");
    }

    #[test]
    fn rejected_inputs() {
        let t = tower(1, 2);
        let err = parse_multisegment("[3,1]@sc", &t).unwrap_err();
        assert_eq!(err.position, 0);
        assert!(err.message.contains("a > b"));
        assert_eq!(parse_multisegment("[0,1]@x", &t).unwrap_err().position, 6);
        assert_eq!(parse_multisegment("[0,1]@sc +", &t).unwrap_err().position, 10);
        assert_eq!(parse_multisegment("0*[0,0]@sc", &t).unwrap_err().position, 0);
        assert!(parse_multisegment("", &t).is_err());
        let char0 = parse_tower("tower(o0=inf, l=0)").unwrap();
        assert_eq!(parse_multisegment("[0,0]@c0", &char0).unwrap_err().position, 6);
        assert!(parse_multisegment("[-2,3]@sc", &char0).is_ok());
    }

    #[test]
    fn zero_round_trips() {
        let t = tower(2, 3);
        let z = parse_multisegment(" 0 ", &t).unwrap();
        assert!(z.is_zero());
        assert_eq!(parse_multisegment(&z.to_string(), &t).unwrap(), z);
    }

    #[test]
    fn single_segments() {
        let t = tower(1, 3);
        assert_eq!(parse_segment("[0,2]@c1", &t).unwrap().len(), 3);
        assert!(parse_segment("2*[0,2]@sc", &t).is_err());
    }
}
