use super::Edge;
use crate::error::{Error, Result};
use std::fmt;
use std::str::FromStr;

/// Provenance of a vertex.
///
/// Text form (used by the graph file format): `plain(3)`, `grid(1,2)`,
/// `div(0,4,1)` for the first division vertex of edge (0,4), and
/// `prod(<left>,<right>)` for product vertices.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Label {
    Plain(usize),
    Grid { row: usize, col: usize },
    Product(Box<Label>, Box<Label>),
    Division { edge: Edge, index: usize },
}

impl Label {
    pub fn product(left: Label, right: Label) -> Self {
        Label::Product(Box::new(left), Box::new(right))
    }
}

impl fmt::Display for Label {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Label::Plain(id) => write!(f, "plain({id})"),
            Label::Grid { row, col } => write!(f, "grid({row},{col})"),
            Label::Product(l, r) => write!(f, "prod({l},{r})"),
            Label::Division { edge, index } => write!(f, "div({},{},{index})", edge.0, edge.1),
        }
    }
}

impl FromStr for Label {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let compact: String = s.chars().filter(|c| !c.is_whitespace()).collect();
        let mut parser = Parser {
            src: compact.as_bytes(),
            pos: 0,
        };
        let label = parser.label()?;
        if parser.pos != parser.src.len() {
            return Err(parser.error("trailing characters"));
        }
        Ok(label)
    }
}

struct Parser<'a> {
    src: &'a [u8],
    pos: usize,
}

impl Parser<'_> {
    fn error(&self, msg: &str) -> Error {
        Error::InvalidInput(format!(
            "bad label `{}` at offset {}: {msg}",
            String::from_utf8_lossy(self.src),
            self.pos
        ))
    }

    fn expect(&mut self, byte: u8) -> Result<()> {
        if self.src.get(self.pos) == Some(&byte) {
            self.pos += 1;
            Ok(())
        } else {
            Err(self.error(&format!("expected `{}`", byte as char)))
        }
    }

    fn word(&mut self) -> &str {
        let start = self.pos;
        while self.pos < self.src.len() && self.src[self.pos].is_ascii_alphabetic() {
            self.pos += 1;
        }
        std::str::from_utf8(&self.src[start..self.pos]).unwrap_or("")
    }

    fn number(&mut self) -> Result<usize> {
        let start = self.pos;
        while self.pos < self.src.len() && self.src[self.pos].is_ascii_digit() {
            self.pos += 1;
        }
        std::str::from_utf8(&self.src[start..self.pos])
            .ok()
            .and_then(|t| t.parse().ok())
            .ok_or_else(|| self.error("expected a number"))
    }

    fn label(&mut self) -> Result<Label> {
        let tag = self.word().to_owned();
        self.expect(b'(')?;
        let label = match tag.as_str() {
            "plain" => Label::Plain(self.number()?),
            "grid" => {
                let row = self.number()?;
                self.expect(b',')?;
                let col = self.number()?;
                Label::Grid { row, col }
            }
            "div" => {
                let u = self.number()?;
                self.expect(b',')?;
                let v = self.number()?;
                self.expect(b',')?;
                let index = self.number()?;
                if index == 0 {
                    return Err(self.error("division index must be at least 1"));
                }
                Label::Division {
                    edge: Edge::new(u, v),
                    index,
                }
            }
            "prod" => {
                let left = self.label()?;
                self.expect(b',')?;
                let right = self.label()?;
                Label::product(left, right)
            }
            other => return Err(self.error(&format!("unknown label kind `{other}`"))),
        };
        self.expect(b')')?;
        Ok(label)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn text_round_trip() {
        let l = Label::product(
            Label::Grid { row: 1, col: 2 },
            Label::Division {
                edge: Edge(0, 4),
                index: 3,
            },
        );
        let text = l.to_string();
        assert_eq!(text, "prod(grid(1,2),div(0,4,3))");
        assert_eq!(text.parse::<Label>().unwrap(), l);
    }

    #[test]
    fn rejects_garbage() {
        assert!("grid(1)".parse::<Label>().is_err());
        assert!("div(0,1,0)".parse::<Label>().is_err());
        assert!("plain(1)x".parse::<Label>().is_err());
        assert!("vertex(1)".parse::<Label>().is_err());
    }
}
