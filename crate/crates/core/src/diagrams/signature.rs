use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Orientation {
    Fundamental,
    Antifundamental,
}

impl Orientation {
    pub fn flip(self) -> Self {
        match self {
            Orientation::Fundamental => Orientation::Antifundamental,
            Orientation::Antifundamental => Orientation::Fundamental,
        }
    }

    pub fn is_fundamental(self) -> bool {
        self == Orientation::Fundamental
    }

    pub fn symbol(self) -> char {
        match self {
            Orientation::Fundamental => 'q',
            Orientation::Antifundamental => 'b',
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Role {
    Operator,
    Ket,
    /// A ket read as a dual vector; same legs, conjugated use.
    Bra,
}

/// Slot orientations plus role. An operator slot has an out port and an in
/// port; a ket slot is a single output leg.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct LegSignature {
    orientations: Vec<Orientation>,
    role: Role,
}

/// Endpoint bookkeeping. Operator endpoints are `out_s = s`, `in_s = p + s`;
/// ket endpoints are the leg indices. A strand runs from a source ("down")
/// endpoint to a sink ("up") endpoint.
#[derive(Debug)]
pub(crate) struct Ports {
    pub downs: Vec<usize>,
    pub ups: Vec<usize>,
    /// `(true, i)` for the `i`-th down endpoint, `(false, j)` for the `j`-th
    /// up endpoint.
    pub lookup: Vec<(bool, usize)>,
}

impl LegSignature {
    pub fn new(orientations: Vec<Orientation>, role: Role) -> Result<Self> {
        if role != Role::Operator {
            let q = orientations.iter().filter(|o| o.is_fundamental()).count();
            if 2 * q != orientations.len() {
                return Err(Error::SignatureMismatch(format!(
                    "ket with {q} fundamental and {} antifundamental legs has no invariants",
                    orientations.len() - q
                )));
            }
        }
        Ok(LegSignature { orientations, role })
    }

    pub fn operator(orientations: Vec<Orientation>) -> Self {
        LegSignature {
            orientations,
            role: Role::Operator,
        }
    }

    /// `V^{⊗m} ⊗ V*^{⊗n}` operator slots: `m` fundamental then `n` antifundamental.
    pub fn mixed(m: usize, n: usize) -> Self {
        let mut o = vec![Orientation::Fundamental; m];
        o.extend(std::iter::repeat(Orientation::Antifundamental).take(n));
        LegSignature::operator(o)
    }

    pub fn tensor_power(m: usize) -> Self {
        LegSignature::mixed(m, 0)
    }

    /// Canonical `Mixed(k, k)` ket: `k` fundamental legs then `k` antifundamental.
    pub fn mixed_ket(k: usize) -> Self {
        let mut o = vec![Orientation::Fundamental; k];
        o.extend(std::iter::repeat(Orientation::Antifundamental).take(k));
        LegSignature {
            orientations: o,
            role: Role::Ket,
        }
    }

    pub fn orientations(&self) -> &[Orientation] {
        &self.orientations
    }

    pub fn role(&self) -> Role {
        self.role
    }

    pub fn is_operator(&self) -> bool {
        self.role == Role::Operator
    }

    pub fn is_state(&self) -> bool {
        self.role != Role::Operator
    }

    pub fn len(&self) -> usize {
        self.orientations.len()
    }

    pub fn is_empty(&self) -> bool {
        self.orientations.is_empty()
    }

    /// Number of strands, i.e. the degree of each diagram's linking.
    pub fn strands(&self) -> usize {
        match self.role {
            Role::Operator => self.orientations.len(),
            _ => self.orientations.len() / 2,
        }
    }

    pub fn n_endpoints(&self) -> usize {
        match self.role {
            Role::Operator => 2 * self.orientations.len(),
            _ => self.orientations.len(),
        }
    }

    pub fn with_role(&self, role: Role) -> Result<Self> {
        LegSignature::new(self.orientations.clone(), role)
    }

    pub fn orientation_string(&self) -> String {
        self.orientations.iter().map(|o| o.symbol()).collect()
    }

    /// Same slots regardless of ket/bra.
    pub(crate) fn same_legs(&self, other: &LegSignature) -> bool {
        self.orientations == other.orientations && self.is_operator() == other.is_operator()
    }

    pub(crate) fn ports(&self) -> Ports {
        let n = self.n_endpoints();
        let mut downs = Vec::new();
        let mut ups = Vec::new();
        let mut lookup = vec![(false, 0); n];
        match self.role {
            Role::Operator => {
                let p = self.orientations.len();
                for (s, o) in self.orientations.iter().enumerate() {
                    let (down, up) = if o.is_fundamental() { (p + s, s) } else { (s, p + s) };
                    lookup[down] = (true, downs.len());
                    downs.push(down);
                    lookup[up] = (false, ups.len());
                    ups.push(up);
                }
            }
            _ => {
                for (leg, o) in self.orientations.iter().enumerate() {
                    if o.is_fundamental() {
                        lookup[leg] = (false, ups.len());
                        ups.push(leg);
                    } else {
                        lookup[leg] = (true, downs.len());
                        downs.push(leg);
                    }
                }
            }
        }
        Ports { downs, ups, lookup }
    }
}

impl fmt::Display for LegSignature {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let role = match self.role {
            Role::Operator => "operator",
            Role::Ket => "ket",
            Role::Bra => "bra",
        };
        write!(f, "{}[{}]", role, self.orientation_string())
    }
}

/// Parse a string of `q` (fundamental) and `b` (antifundamental) symbols.
pub fn parse_orientations(s: &str) -> Result<Vec<Orientation>> {
    s.chars()
        .map(|c| match c {
            'q' => Ok(Orientation::Fundamental),
            'b' => Ok(Orientation::Antifundamental),
            _ => Err(Error::Parse(format!("orientation symbol {c:?} (expected q or b)"))),
        })
        .collect()
}

impl FromStr for Role {
    type Err = Error;
    fn from_str(s: &str) -> Result<Role> {
        match s {
            "operator" => Ok(Role::Operator),
            "ket" => Ok(Role::Ket),
            "bra" => Ok(Role::Bra),
            _ => Err(Error::Parse(format!("role {s:?}"))),
        }
    }
}
