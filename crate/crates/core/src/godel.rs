//! Gödel numbering for statements and programs.
//!
//! Both encodings are bijective positional numeral systems, so they are
//! total in one direction, injective in both, and strictly monotone in the
//! length of the serialized form:
//!
//! * statements — bijective base-45 over the fixed character alphabet of
//!   canonical statement text (see [`STATEMENT_ALPHABET`]); a number decodes
//!   to a statement only if its character string parses and reprints to
//!   itself, so statement decoding is partial;
//! * programs — bijective base-256 over raw bytes; every natural ≥ 1
//!   decodes to a program (1 is the empty program), so program decoding is
//!   total.

use crate::statement::{parse, Statement};
use crate::vm::Program;
use num_bigint::BigUint;
use std::fmt;

/// Character alphabet of canonical statement text. Digit values are
/// 1-based positions in this string.
pub const STATEMENT_ALPHABET: &[u8] = b"abcdefghijklmnopqrstuvwxyz0123456789_!()=> TF";

/// A Gödel number. Always ≥ 1.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct GodelNumber(BigUint);

impl GodelNumber {
    pub fn value(&self) -> &BigUint {
        &self.0
    }

    pub fn into_value(self) -> BigUint {
        self.0
    }
}

impl From<u64> for GodelNumber {
    fn from(n: u64) -> Self {
        assert!(n >= 1, "Gödel numbers start at 1");
        GodelNumber(BigUint::from(n))
    }
}

impl From<BigUint> for GodelNumber {
    fn from(n: BigUint) -> Self {
        assert!(n >= BigUint::from(1u8), "Gödel numbers start at 1");
        GodelNumber(n)
    }
}

impl fmt::Display for GodelNumber {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.0)
    }
}

fn digit_of(ch: u8) -> Option<u64> {
    STATEMENT_ALPHABET
        .iter()
        .position(|&c| c == ch)
        .map(|p| p as u64 + 1)
}

/// Bijective value of a digit string (digits 1..=base), empty string = 0.
fn bijective_value(digits: impl Iterator<Item = u64>, base: u64) -> BigUint {
    let mut v = BigUint::ZERO;
    for d in digits {
        debug_assert!(d >= 1 && d <= base);
        v = v * base + d;
    }
    v
}

/// Inverse of [`bijective_value`]: digit string (1..=base) of a value.
fn bijective_digits(value: &BigUint, base: u64) -> Vec<u64> {
    let big_base = BigUint::from(base);
    let mut v = value.clone();
    let mut digits = Vec::new();
    while v > BigUint::ZERO {
        let rem: BigUint = &v % &big_base;
        let mut d: u64 = rem.try_into().expect("remainder below base");
        v /= &big_base;
        if d == 0 {
            d = base;
            v -= 1u8;
        }
        digits.push(d);
    }
    digits.reverse();
    digits
}

/// Encode a canonical statement as the bijective base-45 value of its
/// printed text.
pub fn encode_statement(s: &Statement) -> GodelNumber {
    let text = s.to_string();
    let digits = text.bytes().map(|b| digit_of(b).expect("printable statement char"));
    GodelNumber(bijective_value(digits, STATEMENT_ALPHABET.len() as u64))
}

/// Decode a statement number. Succeeds only when the character string
/// parses and its canonical reprint is exactly the decoded string.
pub fn decode_statement(n: &GodelNumber) -> Option<Statement> {
    decode_statement_value(&n.0)
}

/// [`decode_statement`] on a raw natural (0 never decodes).
pub fn decode_statement_value(value: &BigUint) -> Option<Statement> {
    if *value == BigUint::ZERO {
        return None;
    }
    let digits = bijective_digits(value, STATEMENT_ALPHABET.len() as u64);
    let bytes: Vec<u8> = digits
        .iter()
        .map(|&d| STATEMENT_ALPHABET[d as usize - 1])
        .collect();
    let text = String::from_utf8(bytes).expect("alphabet is ascii");
    let stmt = parse(&text).ok()?;
    if stmt.to_string() == text {
        Some(stmt)
    } else {
        None
    }
}

/// Encode a program. The empty program maps to 1.
pub fn encode_program(p: &Program) -> GodelNumber {
    let digits = p.bytes().iter().map(|&b| b as u64 + 1);
    GodelNumber(bijective_value(digits, 256) + 1u8)
}

/// Decode a program; total for every n ≥ 1.
pub fn decode_program(n: &GodelNumber) -> Program {
    let v = &n.0 - 1u8;
    let bytes: Vec<u8> = bijective_digits(&v, 256)
        .into_iter()
        .map(|d| (d - 1) as u8)
        .collect();
    Program::new(bytes)
}

/// Convenience: decode the program at a plain index.
pub fn program_at_index(index: u64) -> Program {
    decode_program(&GodelNumber::from(index))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::statement::parse;

    #[test]
    fn single_letters_encode_to_their_rank() {
        assert_eq!(encode_statement(&parse("a").unwrap()).value(), &BigUint::from(1u8));
        assert_eq!(encode_statement(&parse("e").unwrap()).value(), &BigUint::from(5u8));
        assert_eq!(encode_statement(&parse("z").unwrap()).value(), &BigUint::from(26u8));
    }

    #[test]
    fn statement_decode_round_trips() {
        for text in ["a", "e", "!d", "a => b", "unprov(5)", "deg(5)=1"] {
            let s = parse(text).unwrap();
            let n = encode_statement(&s);
            assert_eq!(decode_statement(&n), Some(s), "round trip of {text}");
        }
    }

    #[test]
    fn non_canonical_strings_do_not_decode() {
        // 38 is the bare `!` character.
        assert_eq!(decode_statement_value(&BigUint::from(38u8)), None);
        // `a=>b` parses but reprints as `a => b`, so it is not a code.
        let compact: BigUint = {
            let digits = "a=>b".bytes().map(|b| super::digit_of(b).unwrap());
            super::bijective_value(digits, STATEMENT_ALPHABET.len() as u64)
        };
        assert_eq!(decode_statement_value(&compact), None);
    }

    #[test]
    fn first_program_is_empty() {
        let p = program_at_index(1);
        assert!(p.bytes().is_empty());
    }

    #[test]
    fn program_encoding_is_a_bijection_on_a_prefix() {
        for n in 1u64..=10_000 {
            let g = GodelNumber::from(n);
            let p = decode_program(&g);
            assert_eq!(encode_program(&p), g, "index {n}");
        }
    }

    #[test]
    fn program_decode_is_total_on_a_prefix() {
        for n in 1u64..=100_000 {
            let _ = program_at_index(n);
        }
    }

    #[test]
    fn length_blocks_are_ordered() {
        // Bijective numbering is strictly monotone in string length: every
        // length-3 value is below every length-5 value. Check the block
        // boundaries over the raw digit space.
        let base = STATEMENT_ALPHABET.len() as u64;
        let max3 = bijective_value([base, base, base].into_iter(), base);
        let min5 = bijective_value([1, 1, 1, 1, 1].into_iter(), base);
        assert!(max3 < min5);
    }

    #[test]
    fn token_length_monotonicity_exhaustive_small() {
        // Oracle: enumerate every character string of length ≤ 3 over the
        // alphabet, keep the ones that are canonical statement text, and
        // take the largest encoding. It must sit below the encoding of the
        // shortest 5-character statement text (all-`a` atom, the minimal
        // length-5 digit string).
        let alphabet = STATEMENT_ALPHABET;
        let mut max3 = BigUint::ZERO;
        let mut count = 0u32;
        let mut lens: Vec<Vec<String>> =
            vec![alphabet.iter().map(|&b| (b as char).to_string()).collect()];
        for _ in 0..2 {
            let prev = lens.last().unwrap();
            let mut next = Vec::with_capacity(prev.len() * alphabet.len());
            for s in prev {
                for &b in alphabet {
                    next.push(format!("{s}{}", b as char));
                }
            }
            lens.push(next);
        }
        for text in lens.iter().flatten() {
            if let Ok(stmt) = parse(text) {
                if stmt.to_string() == *text {
                    count += 1;
                    let n = encode_statement(&stmt).into_value();
                    if n > max3 {
                        max3 = n;
                    }
                }
            }
        }
        assert!(count > 0);
        let min5 = encode_statement(&parse("aaaaa").unwrap()).into_value();
        assert!(max3 < min5, "max 3-char {max3} vs min 5-char {min5}");
    }
}
