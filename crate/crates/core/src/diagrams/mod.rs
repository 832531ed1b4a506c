//! Birdtrack algebra on mixed tensor powers.
//!
//! Every primitive invariant is a set of δ-lines joining source endpoints to
//! sink endpoints. For an operator slot of fundamental orientation the in
//! port is the source and the out port the sink; antifundamental slots are
//! the reverse. Ket legs are sinks when fundamental and sources when
//! antifundamental. A diagram stores which sink each source reaches, so on
//! `V^{⊗m}` the linking is literally the permutation, and composition of
//! primitives is permutation composition up to a power of `N`.

mod element;
mod glue;
mod perm;
mod signature;

pub use element::{InvariantElement, PrimitiveDiagram};
pub use perm::{parse_cycle_list, Perm};
pub use signature::{parse_orientations, LegSignature, Orientation, Role};

use serde::de::Error as _;
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::coefficients::RadicalCoefficient;

#[derive(Serialize, Deserialize)]
struct SignatureRepr {
    orientations: String,
    role: Role,
}

#[derive(Serialize, Deserialize)]
struct TermRepr {
    perm: Vec<usize>,
    coeff: RadicalCoefficient,
}

#[derive(Serialize, Deserialize)]
struct ElementRepr {
    signature: SignatureRepr,
    terms: Vec<TermRepr>,
}

impl Serialize for LegSignature {
    fn serialize<S: Serializer>(&self, ser: S) -> Result<S::Ok, S::Error> {
        SignatureRepr {
            orientations: self.orientation_string(),
            role: self.role(),
        }
        .serialize(ser)
    }
}

impl<'de> Deserialize<'de> for LegSignature {
    fn deserialize<D: Deserializer<'de>>(de: D) -> Result<Self, D::Error> {
        let r = SignatureRepr::deserialize(de)?;
        let o = parse_orientations(&r.orientations).map_err(D::Error::custom)?;
        LegSignature::new(o, r.role).map_err(D::Error::custom)
    }
}

/// Linkings are written 1-based in one-line notation.
impl Serialize for InvariantElement {
    fn serialize<S: Serializer>(&self, ser: S) -> Result<S::Ok, S::Error> {
        let sig = self.signature();
        ElementRepr {
            signature: SignatureRepr {
                orientations: sig.orientation_string(),
                role: sig.role(),
            },
            terms: self
                .terms()
                .map(|(d, c)| TermRepr {
                    perm: d.linking().images().iter().map(|i| i + 1).collect(),
                    coeff: c.clone(),
                })
                .collect(),
        }
        .serialize(ser)
    }
}

impl<'de> Deserialize<'de> for InvariantElement {
    fn deserialize<D: Deserializer<'de>>(de: D) -> Result<Self, D::Error> {
        let r = ElementRepr::deserialize(de)?;
        let o = parse_orientations(&r.signature.orientations).map_err(D::Error::custom)?;
        let sig = LegSignature::new(o, r.signature.role).map_err(D::Error::custom)?;
        let terms = r
            .terms
            .into_iter()
            .map(|t| {
                let images = t
                    .perm
                    .iter()
                    .map(|&i| i.checked_sub(1).ok_or_else(|| D::Error::custom("perm entries are 1-based")))
                    .collect::<Result<Vec<_>, _>>()?;
                let p = Perm::from_images(images).map_err(D::Error::custom)?;
                Ok((PrimitiveDiagram::new(p), t.coeff))
            })
            .collect::<Result<Vec<_>, D::Error>>()?;
        InvariantElement::from_terms(sig, terms).map_err(D::Error::custom)
    }
}
