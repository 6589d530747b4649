//! The group-description language.
//!
//! ```text
//! spec := atom { "x" atom }
//! atom := ("C" | "D" | "Q" | "S") "(" digits ")"
//! ```
//!
//! Whitespace is ignored and letters are case-insensitive. A spec denotes
//! the direct product of its atoms, left to right. `D(n)` has order `2n`,
//! `Q(m)` has order `m`.

use std::fmt;

use powergraph::{arith, FiniteGroup};
use thiserror::Error;

pub const DEFAULT_MAX_ORDER: u64 = 4096;
pub const MAX_ORDER_ENV: &str = "PG_MAX_ORDER";

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum SpecError {
    #[error("syntax error at column {}: expected {expected}, found {found}", .position + 1)]
    Syntax {
        position: usize,
        expected: &'static str,
        found: String,
    },
    #[error("invalid group {atom}: {reason}")]
    Semantic { atom: String, reason: &'static str },
    #[error("group order {order} exceeds the cap of {cap} (set {MAX_ORDER_ENV} to raise it)")]
    TooLarge { order: u128, cap: u64 },
}

impl SpecError {
    pub fn is_syntax(&self) -> bool {
        matches!(self, SpecError::Syntax { .. })
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Family {
    Cyclic,
    Dihedral,
    Quaternion,
    Symmetric,
}

impl Family {
    fn letter(self) -> char {
        match self {
            Family::Cyclic => 'C',
            Family::Dihedral => 'D',
            Family::Quaternion => 'Q',
            Family::Symmetric => 'S',
        }
    }

    fn from_letter(c: char) -> Option<Self> {
        match c.to_ascii_uppercase() {
            'C' => Some(Family::Cyclic),
            'D' => Some(Family::Dihedral),
            'Q' => Some(Family::Quaternion),
            'S' => Some(Family::Symmetric),
            _ => None,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct Atom {
    pub family: Family,
    pub param: u64,
}

impl Atom {
    pub fn new(family: Family, param: u64) -> Self {
        Atom { family, param }
    }

    pub fn order(&self) -> Option<u128> {
        let p = u128::from(self.param);
        match self.family {
            Family::Cyclic | Family::Quaternion => Some(p),
            Family::Dihedral => Some(2 * p),
            Family::Symmetric => (1..=p).try_fold(1u128, |acc, k| acc.checked_mul(k)),
        }
    }

    fn check(&self) -> Result<(), SpecError> {
        let reason = match self.family {
            Family::Cyclic | Family::Dihedral if self.param == 0 => "parameter must be positive",
            Family::Quaternion if self.param < 8 || !self.param.is_power_of_two() => {
                "order must be a power of 2 and at least 8"
            }
            Family::Symmetric if self.param == 0 || self.param > 6 => {
                "degree must be between 1 and 6"
            }
            _ => return Ok(()),
        };
        Err(SpecError::Semantic {
            atom: self.to_string(),
            reason,
        })
    }

    pub fn build(&self) -> FiniteGroup {
        let built = match self.family {
            Family::Cyclic => FiniteGroup::cyclic(self.param),
            Family::Dihedral => FiniteGroup::dihedral(self.param),
            Family::Quaternion => FiniteGroup::generalized_quaternion(self.param),
            Family::Symmetric => FiniteGroup::symmetric(self.param),
        };
        built.expect("atom parameters are validated at parse time")
    }
}

impl fmt::Display for Atom {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}({})", self.family.letter(), self.param)
    }
}

/// A parsed, validated group description.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct GroupSpec {
    atoms: Vec<Atom>,
}

impl fmt::Display for GroupSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, a) in self.atoms.iter().enumerate() {
            if i > 0 {
                f.write_str("x")?;
            }
            write!(f, "{a}")?;
        }
        Ok(())
    }
}

impl GroupSpec {
    pub fn new(atoms: Vec<Atom>, max_order: u64) -> Result<Self, SpecError> {
        assert!(!atoms.is_empty(), "a spec has at least one atom");
        for a in &atoms {
            a.check()?;
        }
        let spec = GroupSpec { atoms };
        let order = spec.order_u128();
        if order.is_none_or(|o| o > u128::from(max_order)) {
            return Err(SpecError::TooLarge {
                order: order.unwrap_or(u128::MAX),
                cap: max_order,
            });
        }
        Ok(spec)
    }

    pub fn atoms(&self) -> &[Atom] {
        &self.atoms
    }

    fn order_u128(&self) -> Option<u128> {
        self.atoms
            .iter()
            .try_fold(1u128, |acc, a| acc.checked_mul(a.order()?))
    }

    pub fn order(&self) -> u64 {
        self.order_u128().expect("validated") as u64
    }

    /// Canonical text form, e.g. `C(9)xS(3)`.
    pub fn render(&self) -> String {
        self.to_string()
    }

    /// Folds the direct product over the atoms.
    pub fn build(&self) -> FiniteGroup {
        let mut g = self.atoms[0].build();
        for a in &self.atoms[1..] {
            g = FiniteGroup::direct_product(&g, &a.build());
        }
        g.with_name(self.render())
    }

    /// When the spec reads `C(p^n) x H` with `p` prime and coprime to `|H|`,
    /// returns `(p, n, H)`; `H` is `C(1)` for a lone cyclic atom.
    pub fn coprime_split(&self) -> Option<(u64, u32, GroupSpec)> {
        let first = self.atoms[0];
        if first.family != Family::Cyclic {
            return None;
        }
        let (p, n) = arith::prime_power(first.param)?;
        let rest = if self.atoms.len() == 1 {
            vec![Atom::new(Family::Cyclic, 1)]
        } else {
            self.atoms[1..].to_vec()
        };
        let h = GroupSpec { atoms: rest };
        (!h.order().is_multiple_of(p)).then_some((p, n, h))
    }
}

/// Reads the order cap from `PG_MAX_ORDER`, defaulting to 4096.
pub fn max_order_from_env() -> u64 {
    std::env::var(MAX_ORDER_ENV)
        .ok()
        .and_then(|v| v.trim().parse().ok())
        .unwrap_or(DEFAULT_MAX_ORDER)
}

struct Parser {
    chars: Vec<char>,
    pos: usize,
}

impl Parser {
    fn skip_ws(&mut self) {
        while self.pos < self.chars.len() && self.chars[self.pos].is_whitespace() {
            self.pos += 1;
        }
    }

    fn peek(&mut self) -> Option<char> {
        self.skip_ws();
        self.chars.get(self.pos).copied()
    }

    fn error(&mut self, expected: &'static str) -> SpecError {
        let found = match self.peek() {
            Some(c) => format!("'{c}'"),
            None => "end of input".to_string(),
        };
        SpecError::Syntax {
            position: self.pos,
            expected,
            found,
        }
    }

    fn expect(&mut self, want: char, expected: &'static str) -> Result<(), SpecError> {
        if self.peek() == Some(want) {
            self.pos += 1;
            Ok(())
        } else {
            Err(self.error(expected))
        }
    }

    fn atom(&mut self) -> Result<Atom, SpecError> {
        let family = match self.peek().and_then(Family::from_letter) {
            Some(f) => f,
            None => return Err(self.error("a group family (C, D, Q or S)")),
        };
        self.pos += 1;
        self.expect('(', "'('")?;
        self.skip_ws();
        let start = self.pos;
        let mut digits = String::new();
        while let Some(&c) = self.chars.get(self.pos) {
            if c.is_ascii_digit() {
                digits.push(c);
                self.pos += 1;
            } else if c.is_whitespace() {
                self.pos += 1;
            } else {
                break;
            }
        }
        if digits.is_empty() {
            self.pos = start;
            return Err(self.error("digits"));
        }
        let param = digits.parse::<u64>().map_err(|_| SpecError::Semantic {
            atom: format!("{}({digits})", family.letter()),
            reason: "parameter does not fit in 64 bits",
        })?;
        self.expect(')', "')'")?;
        Ok(Atom::new(family, param))
    }

    fn spec(&mut self) -> Result<Vec<Atom>, SpecError> {
        let mut atoms = vec![self.atom()?];
        loop {
            match self.peek() {
                None => return Ok(atoms),
                Some('x' | 'X') => {
                    self.pos += 1;
                    atoms.push(self.atom()?);
                }
                Some(_) => return Err(self.error("'x' or end of input")),
            }
        }
    }
}

/// Parses and validates `text` with an explicit order cap.
pub fn parse_spec_with_cap(text: &str, max_order: u64) -> Result<GroupSpec, SpecError> {
    let mut parser = Parser {
        chars: text.chars().collect(),
        pos: 0,
    };
    let atoms = parser.spec()?;
    GroupSpec::new(atoms, max_order)
}

/// Parses and validates `text`, capping the order at `PG_MAX_ORDER`.
pub fn parse_spec(text: &str) -> Result<GroupSpec, SpecError> {
    parse_spec_with_cap(text, max_order_from_env())
}
