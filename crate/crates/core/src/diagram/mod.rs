//! Oriented classical and virtual link diagrams as signed Gauss codes.
//!
//! A code lists, for each component, the classical crossings met while
//! traversing it: `O3-` means passing over crossing 3, which is negative.
//! Components are separated by `/`; a component without classical crossings
//! is written `-`. Virtual crossings are not recorded: colors pass through
//! them unchanged, so the code already determines every coloring.
//!
//! ```text
//! O1+ / U1+                                 virtual Hopf link
//! O1+ U2+ O3+ U1+ O2+ U3+                   trefoil
//! ```

mod file;
mod moves;
mod semiarcs;

pub use file::{parse_link_file, LinkFileError, NamedLink};
pub use moves::{apply_r1, apply_r2, random_move, random_moves, Kink, MoveError, R2Variant};
pub use semiarcs::{build_constraints, CrossingConstraint, SemiarcSystem};

use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;

use thiserror::Error;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Role {
    Over,
    Under,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Sign {
    Positive,
    Negative,
}

impl Sign {
    pub fn flip(self) -> Sign {
        match self {
            Sign::Positive => Sign::Negative,
            Sign::Negative => Sign::Positive,
        }
    }
}

/// One pass of a component through a classical crossing.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct Passage {
    pub crossing: u32,
    pub role: Role,
    pub sign: Sign,
}

impl Passage {
    pub fn new(crossing: u32, role: Role, sign: Sign) -> Self {
        Passage {
            crossing,
            role,
            sign,
        }
    }
}

impl fmt::Display for Passage {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let role = match self.role {
            Role::Over => 'O',
            Role::Under => 'U',
        };
        let sign = match self.sign {
            Sign::Positive => '+',
            Sign::Negative => '-',
        };
        write!(f, "{role}{}{sign}", self.crossing)
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum DiagramError {
    #[error("syntax error at column {position}: {message}")]
    SyntaxError { position: usize, message: String },
    #[error("crossing {0} must be passed exactly once over and once under")]
    CrossingUsedWrong(u32),
    #[error("the two passages of crossing {0} carry different signs")]
    SignMismatch(u32),
}

/// A validated oriented link diagram.
///
/// Every crossing id occurs exactly twice, once `Over` and once `Under`,
/// with one sign.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct LinkDiagram {
    components: Vec<Vec<Passage>>,
}

impl LinkDiagram {
    /// Validates passage lists; an empty list is a zero-crossing component.
    pub fn new(components: Vec<Vec<Passage>>) -> Result<Self, DiagramError> {
        let mut order = Vec::new();
        let mut seen: BTreeMap<u32, (usize, usize, Option<Sign>, bool)> = BTreeMap::new();
        for p in components.iter().flatten() {
            let entry = seen.entry(p.crossing).or_insert_with(|| {
                order.push(p.crossing);
                (0, 0, None, false)
            });
            match p.role {
                Role::Over => entry.0 += 1,
                Role::Under => entry.1 += 1,
            }
            match entry.2 {
                None => entry.2 = Some(p.sign),
                Some(s) if s != p.sign => entry.3 = true,
                Some(_) => {}
            }
        }
        if components.is_empty() {
            return Err(DiagramError::SyntaxError {
                position: 1,
                message: "a link needs at least one component".into(),
            });
        }
        for id in order {
            let (over, under, _, mismatch) = seen[&id];
            if over != 1 || under != 1 {
                return Err(DiagramError::CrossingUsedWrong(id));
            }
            if mismatch {
                return Err(DiagramError::SignMismatch(id));
            }
        }
        Ok(LinkDiagram { components })
    }

    pub fn components(&self) -> &[Vec<Passage>] {
        &self.components
    }

    pub fn component_count(&self) -> usize {
        self.components.len()
    }

    pub fn crossing_count(&self) -> usize {
        self.passage_count() / 2
    }

    pub fn passage_count(&self) -> usize {
        self.components.iter().map(Vec::len).sum()
    }

    /// Number of semiarcs: one per passage plus one per crossingless component.
    pub fn semiarc_count(&self) -> usize {
        self.components.iter().map(|c| c.len().max(1)).sum()
    }

    pub fn max_crossing_id(&self) -> u32 {
        self.components
            .iter()
            .flatten()
            .map(|p| p.crossing)
            .max()
            .unwrap_or(0)
    }

    /// Writhe: number of positive minus number of negative crossings.
    pub fn writhe(&self) -> i64 {
        self.components
            .iter()
            .flatten()
            .filter(|p| p.role == Role::Over)
            .map(|p| match p.sign {
                Sign::Positive => 1,
                Sign::Negative => -1,
            })
            .sum()
    }
}

/// Parses a signed Gauss code such as `O1+ U2- / U1+ O2-`.
pub fn parse_gauss_code(text: &str) -> Result<LinkDiagram, DiagramError> {
    let mut components = Vec::new();
    let mut offset = 0;
    for chunk in text.split('/') {
        let mut passages = Vec::new();
        let mut tokens = 0;
        let mut zero_marker = None;
        let mut cursor = 0;
        for token in chunk.split_whitespace() {
            let start = cursor + chunk[cursor..].find(token).expect("token comes from chunk");
            cursor = start + token.len();
            let position = offset + start + 1;
            tokens += 1;
            if token == "-" {
                zero_marker = Some(position);
                continue;
            }
            passages.push(parse_passage(token, position)?);
        }
        match (tokens, zero_marker) {
            (0, _) => {
                return Err(DiagramError::SyntaxError {
                    position: offset + 1,
                    message: "empty component (use `-` for a component without crossings)".into(),
                })
            }
            (1, Some(_)) => {}
            (_, Some(position)) => {
                return Err(DiagramError::SyntaxError {
                    position,
                    message: "`-` must be the only token of its component".into(),
                })
            }
            _ => {}
        }
        components.push(passages);
        offset += chunk.len() + 1;
    }
    LinkDiagram::new(components)
}

fn parse_passage(token: &str, position: usize) -> Result<Passage, DiagramError> {
    let err = |message: &str| DiagramError::SyntaxError {
        position,
        message: format!("{message} in {token:?}"),
    };
    let mut chars = token.chars();
    let role = match chars.next() {
        Some('O') => Role::Over,
        Some('U') => Role::Under,
        _ => return Err(err("expected `O` or `U`")),
    };
    let sign = match token.chars().last() {
        Some('+') => Sign::Positive,
        Some('-') => Sign::Negative,
        _ => return Err(err("expected a trailing `+` or `-`")),
    };
    let digits = &token[1..token.len() - 1];
    if digits.is_empty() || !digits.bytes().all(|b| b.is_ascii_digit()) {
        return Err(err("expected a crossing number"));
    }
    let crossing: u32 = digits.parse().map_err(|_| err("crossing number too large"))?;
    if crossing == 0 {
        return Err(err("crossing numbers start at 1"));
    }
    Ok(Passage::new(crossing, role, sign))
}

impl FromStr for LinkDiagram {
    type Err = DiagramError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        parse_gauss_code(s)
    }
}

impl fmt::Display for LinkDiagram {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, comp) in self.components.iter().enumerate() {
            if i > 0 {
                f.write_str(" / ")?;
            }
            if comp.is_empty() {
                f.write_str("-")?;
            }
            for (j, p) in comp.iter().enumerate() {
                if j > 0 {
                    f.write_str(" ")?;
                }
                write!(f, "{p}")?;
            }
        }
        Ok(())
    }
}
