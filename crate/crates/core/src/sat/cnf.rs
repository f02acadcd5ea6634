//! DIMACS CNF input restricted to clauses with exactly three literals.

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// A variable index (0-based) with a sign.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Literal {
    pub var: usize,
    pub positive: bool,
}

impl Literal {
    pub fn pos(var: usize) -> Self {
        Literal { var, positive: true }
    }

    pub fn neg(var: usize) -> Self {
        Literal { var, positive: false }
    }

    /// DIMACS encoding: 1-based, negative for negated literals.
    pub fn to_dimacs(self) -> i64 {
        let v = self.var as i64 + 1;
        if self.positive {
            v
        } else {
            -v
        }
    }

    pub fn from_dimacs(x: i64) -> Option<Self> {
        if x == 0 {
            return None;
        }
        Some(Literal { var: (x.unsigned_abs() - 1) as usize, positive: x > 0 })
    }

    pub fn eval(self, assignment: &[bool]) -> bool {
        assignment[self.var] == self.positive
    }
}

impl fmt::Display for Literal {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}x{}", if self.positive { "" } else { "~" }, self.var)
    }
}

impl Serialize for Literal {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.serialize_i64(self.to_dimacs())
    }
}

impl<'de> Deserialize<'de> for Literal {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let x = i64::deserialize(d)?;
        Literal::from_dimacs(x).ok_or_else(|| serde::de::Error::custom("literal 0"))
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CnfFormula {
    pub num_vars: usize,
    pub clauses: Vec<[Literal; 3]>,
}

impl CnfFormula {
    pub fn new(num_vars: usize, clauses: Vec<[Literal; 3]>) -> Result<Self> {
        let f = CnfFormula { num_vars, clauses };
        f.check()?;
        Ok(f)
    }

    pub fn check(&self) -> Result<()> {
        for c in &self.clauses {
            for l in c {
                if l.var >= self.num_vars {
                    return Err(Error::Format(format!("variable {} out of range (n = {})", l.var + 1, self.num_vars)));
                }
            }
        }
        Ok(())
    }

    pub fn num_clauses(&self) -> usize {
        self.clauses.len()
    }

    /// Index of the first clause `assignment` falsifies.
    pub fn first_unsatisfied(&self, assignment: &[bool]) -> Result<Option<usize>> {
        if assignment.len() != self.num_vars {
            return Err(Error::AssignmentLength { got: assignment.len(), expected: self.num_vars });
        }
        Ok(self.clauses.iter().position(|c| !c.iter().any(|l| l.eval(assignment))))
    }

    pub fn satisfies(&self, assignment: &[bool]) -> bool {
        matches!(self.first_unsatisfied(assignment), Ok(None))
    }

    /// All satisfying assignments by enumeration; meant for small `n`.
    pub fn satisfying_assignments(&self) -> Vec<Vec<bool>> {
        assert!(self.num_vars < 24, "enumeration limited to small formulas");
        (0u32..1 << self.num_vars)
            .map(|bits| (0..self.num_vars).map(|i| bits >> i & 1 == 1).collect::<Vec<_>>())
            .filter(|a| self.satisfies(a))
            .collect()
    }

    pub fn to_dimacs(&self) -> String {
        let mut out = format!("p cnf {} {}\n", self.num_vars, self.clauses.len());
        for c in &self.clauses {
            out += &format!("{} {} {} 0\n", c[0].to_dimacs(), c[1].to_dimacs(), c[2].to_dimacs());
        }
        out
    }
}

/// Parses DIMACS CNF. Clauses may span lines; `c` lines are comments and a
/// `%` line ends the input.
pub fn parse_e3cnf(text: &str) -> Result<CnfFormula> {
    let mut header: Option<(usize, usize)> = None;
    let mut clauses = Vec::new();
    let mut current: Vec<Literal> = Vec::new();
    let mut last_line = 0;
    for (idx, raw) in text.lines().enumerate() {
        let line_no = idx + 1;
        last_line = line_no;
        let line = raw.trim();
        if line.is_empty() || line.starts_with('c') {
            continue;
        }
        if line.starts_with('%') {
            break;
        }
        let err = |msg: String| Error::Parse { line: line_no, msg };
        if line.starts_with('p') {
            if header.is_some() {
                return Err(err("duplicate header".into()));
            }
            let parts: Vec<&str> = line.split_whitespace().collect();
            if parts.len() != 4 || parts[0] != "p" || parts[1] != "cnf" {
                return Err(err(format!("malformed header {line:?}")));
            }
            let n = parts[2].parse().map_err(|_| err(format!("bad variable count {:?}", parts[2])))?;
            let m = parts[3].parse().map_err(|_| err(format!("bad clause count {:?}", parts[3])))?;
            header = Some((n, m));
            continue;
        }
        let Some((n, _)) = header else {
            return Err(err("clause before header".into()));
        };
        for tok in line.split_whitespace() {
            let x: i64 = tok.parse().map_err(|_| err(format!("bad literal {tok:?}")))?;
            match Literal::from_dimacs(x) {
                None => {
                    let index = clauses.len();
                    let clause: [Literal; 3] = std::mem::take(&mut current)
                        .try_into()
                        .map_err(|c: Vec<Literal>| Error::ClauseSize { index, len: c.len() })?;
                    clauses.push(clause);
                }
                Some(l) if l.var >= n => return Err(err(format!("variable {} exceeds declared {n}", l.var + 1))),
                Some(l) => current.push(l),
            }
        }
    }
    let Some((n, m)) = header else {
        return Err(Error::Parse { line: last_line, msg: "missing header".into() });
    };
    if !current.is_empty() {
        return Err(Error::Parse { line: last_line, msg: "last clause not terminated by 0".into() });
    }
    if clauses.len() != m {
        return Err(Error::Parse {
            line: last_line,
            msg: format!("header declares {m} clauses, found {}", clauses.len()),
        });
    }
    CnfFormula::new(n, clauses)
}
