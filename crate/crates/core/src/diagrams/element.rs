use std::collections::BTreeMap;
use std::fmt;

use rayon::prelude::*;

use super::glue::glue;
use super::perm::Perm;
use super::signature::{LegSignature, Orientation, Ports, Role};
use crate::coefficients::{RadicalCoefficient, RationalFunction};
use crate::error::{Error, Result};

/// A single δ-line pattern: the `i`-th source endpoint is linked to the
/// `linking(i)`-th sink endpoint of the owning signature (see `Ports`). On
/// `V^{⊗m}` operators this is the permutation itself.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct PrimitiveDiagram {
    linking: Perm,
}

impl PrimitiveDiagram {
    pub fn new(linking: Perm) -> Self {
        PrimitiveDiagram { linking }
    }

    pub fn linking(&self) -> &Perm {
        &self.linking
    }

    /// Endpoint pairs under the given signature's numbering.
    pub(crate) fn edges(&self, ports: &Ports) -> Vec<(usize, usize)> {
        self.linking
            .images()
            .iter()
            .enumerate()
            .map(|(i, &j)| (ports.downs[i], ports.ups[j]))
            .collect()
    }

    /// Inverse of `edges`: each pair must join one source to one sink.
    pub(crate) fn from_pairs(ports: &Ports, pairs: &[(usize, usize)]) -> Result<Self> {
        let mut images = vec![usize::MAX; ports.downs.len()];
        for &(a, b) in pairs {
            let (da, ia) = ports.lookup[a];
            let (db, ib) = ports.lookup[b];
            let (i, j) = match (da, db) {
                (true, false) => (ia, ib),
                (false, true) => (ib, ia),
                _ => {
                    return Err(Error::OrientationViolation(format!(
                        "strand joins endpoints {a} and {b} of equal polarity"
                    )))
                }
            };
            images[i] = j;
        }
        Ok(PrimitiveDiagram::new(Perm::from_images(images)?))
    }
}

/// Linear combination of primitive diagrams sharing one signature. Zero
/// coefficients are never stored.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct InvariantElement {
    signature: LegSignature,
    terms: BTreeMap<PrimitiveDiagram, RadicalCoefficient>,
}

fn accumulate(
    terms: &mut BTreeMap<PrimitiveDiagram, RadicalCoefficient>,
    d: PrimitiveDiagram,
    c: RadicalCoefficient,
) {
    if c.is_zero() {
        return;
    }
    match terms.get_mut(&d) {
        Some(slot) => {
            let sum = &*slot + &c;
            if sum.is_zero() {
                terms.remove(&d);
            } else {
                *slot = sum;
            }
        }
        None => {
            terms.insert(d, c);
        }
    }
}

fn loop_factor(c: &RadicalCoefficient, loops: u32) -> RadicalCoefficient {
    if loops == 0 {
        c.clone()
    } else {
        c.scale(&RationalFunction::var_pow(loops))
    }
}

/// Sum `c * N^loops` grouped by loop count so each power is applied once.
fn sum_by_loops(items: impl IntoIterator<Item = (RadicalCoefficient, u32)>) -> RadicalCoefficient {
    let mut by_loops: BTreeMap<u32, RadicalCoefficient> = BTreeMap::new();
    for (c, l) in items {
        let slot = by_loops.entry(l).or_default();
        *slot = &*slot + &c;
    }
    by_loops
        .iter()
        .fold(RadicalCoefficient::zero(), |acc, (l, c)| &acc + &loop_factor(c, *l))
}

impl InvariantElement {
    pub fn zero(signature: LegSignature) -> Self {
        InvariantElement {
            signature,
            terms: BTreeMap::new(),
        }
    }

    pub fn primitive(signature: LegSignature, diagram: PrimitiveDiagram) -> Result<Self> {
        if diagram.linking().len() != signature.strands() {
            return Err(Error::SignatureMismatch(format!(
                "linking of degree {} on signature {}",
                diagram.linking().len(),
                signature
            )));
        }
        let mut terms = BTreeMap::new();
        terms.insert(diagram, RadicalCoefficient::one());
        Ok(InvariantElement { signature, terms })
    }

    pub fn from_terms<I>(signature: LegSignature, terms: I) -> Result<Self>
    where
        I: IntoIterator<Item = (PrimitiveDiagram, RadicalCoefficient)>,
    {
        let mut out = InvariantElement::zero(signature);
        for (d, c) in terms {
            if d.linking().len() != out.signature.strands() {
                return Err(Error::SignatureMismatch(format!(
                    "linking of degree {} on signature {}",
                    d.linking().len(),
                    out.signature
                )));
            }
            accumulate(&mut out.terms, d, c);
        }
        Ok(out)
    }

    pub fn identity(signature: LegSignature) -> Result<Self> {
        if !signature.is_operator() {
            return Err(Error::SignatureMismatch("identity needs an operator signature".into()));
        }
        let p = signature.len();
        InvariantElement::primitive(signature, PrimitiveDiagram::new(Perm::identity(p)))
    }

    /// A permutation of `V^{⊗m}`.
    pub fn permutation(perm: &Perm) -> Self {
        InvariantElement::primitive(
            LegSignature::tensor_power(perm.len()),
            PrimitiveDiagram::new(perm.clone()),
        )
        .expect("degree matches by construction")
    }

    /// A permutation of `V^{⊗m}` from 1-based cycle notation.
    pub fn from_cycles(m: usize, cycles: &str) -> Result<Self> {
        Ok(InvariantElement::permutation(&Perm::parse_cycles(cycles, m)?))
    }

    /// A ket with one linking.
    pub fn ket(signature: LegSignature, linking: Perm) -> Result<Self> {
        if !signature.is_state() {
            return Err(Error::SignatureMismatch("ket needs a ket signature".into()));
        }
        InvariantElement::primitive(signature, PrimitiveDiagram::new(linking))
    }

    pub fn signature(&self) -> &LegSignature {
        &self.signature
    }

    pub fn terms(&self) -> impl Iterator<Item = (&PrimitiveDiagram, &RadicalCoefficient)> {
        self.terms.iter()
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    pub fn coeff(&self, d: &PrimitiveDiagram) -> RadicalCoefficient {
        self.terms.get(d).cloned().unwrap_or_default()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    /// Errors unless both elements have the same legs.
    pub fn require_same_signature(&self, other: &Self) -> Result<()> {
        self.check_same(other, "signature")
    }

    fn check_same(&self, other: &Self, what: &str) -> Result<()> {
        if self.signature.same_legs(&other.signature) {
            Ok(())
        } else {
            Err(Error::SignatureMismatch(format!(
                "{what}: {} vs {}",
                self.signature, other.signature
            )))
        }
    }

    fn require_operator(&self, what: &str) -> Result<()> {
        if self.signature.is_operator() {
            Ok(())
        } else {
            Err(Error::SignatureMismatch(format!(
                "{what} needs an operator, got {}",
                self.signature
            )))
        }
    }

    fn require_state(&self, what: &str) -> Result<()> {
        if self.signature.is_state() {
            Ok(())
        } else {
            Err(Error::SignatureMismatch(format!(
                "{what} needs a ket, got {}",
                self.signature
            )))
        }
    }

    pub fn add(&self, other: &Self) -> Result<Self> {
        self.check_same(other, "add")?;
        let mut out = self.clone();
        for (d, c) in &other.terms {
            accumulate(&mut out.terms, d.clone(), c.clone());
        }
        Ok(out)
    }

    pub fn sub(&self, other: &Self) -> Result<Self> {
        self.add(&other.neg())
    }

    pub fn neg(&self) -> Self {
        self.map_coeffs(|c| -c)
    }

    pub fn scale(&self, c: &RadicalCoefficient) -> Self {
        self.map_coeffs(|x| x * c)
    }

    pub fn scale_rf(&self, c: &RationalFunction) -> Self {
        self.map_coeffs(|x| x.scale(c))
    }

    fn map_coeffs(&self, f: impl Fn(&RadicalCoefficient) -> RadicalCoefficient) -> Self {
        let mut terms = BTreeMap::new();
        for (d, c) in &self.terms {
            accumulate(&mut terms, d.clone(), f(c));
        }
        InvariantElement {
            signature: self.signature.clone(),
            terms,
        }
    }

    /// Sum of several elements with a common signature.
    pub fn sum<'a, I>(signature: LegSignature, items: I) -> Result<Self>
    where
        I: IntoIterator<Item = &'a InvariantElement>,
    {
        items
            .into_iter()
            .try_fold(InvariantElement::zero(signature), |acc, x| acc.add(x))
    }

    /// Relabel endpoints into a new signature; `map` sends each endpoint of
    /// `self` to an endpoint of `target`.
    fn relabel(&self, target: LegSignature, map: impl Fn(usize) -> usize) -> Result<Self> {
        let src = self.signature.ports();
        let dst = target.ports();
        let mut terms = BTreeMap::new();
        for (d, c) in &self.terms {
            let pairs: Vec<(usize, usize)> = d.edges(&src).into_iter().map(|(a, b)| (map(a), map(b))).collect();
            accumulate(&mut terms, PrimitiveDiagram::from_pairs(&dst, &pairs)?, c.clone());
        }
        Ok(InvariantElement {
            signature: target,
            terms,
        })
    }

    /// `self ∘ other`: `other` acts first. Each closed loop contributes `N`.
    pub fn compose(&self, other: &Self) -> Result<Self> {
        self.require_operator("compose")?;
        other.require_operator("compose")?;
        self.check_same(other, "compose")?;
        let p = self.signature.len();
        let ports = self.signature.ports();
        // A: out_s -> s, in_s -> p+s. B: out_s -> p+s, in_s -> 2p+s.
        let a_edges: Vec<_> = self.terms.iter().map(|(d, c)| (d.edges(&ports), c)).collect();
        let b_edges: Vec<_> = other
            .terms
            .iter()
            .map(|(d, c)| {
                let e: Vec<_> = d.edges(&ports).into_iter().map(|(x, y)| (x + p, y + p)).collect();
                (e, c)
            })
            .collect();
        let to_result = |v: usize| if v < p { v } else { v - p };
        let products: Vec<(PrimitiveDiagram, RadicalCoefficient, u32)> = a_edges
            .par_iter()
            .flat_map_iter(|(ea, ca)| {
                let ports = &ports;
                b_edges.iter().map(move |(eb, cb)| {
                    let mut edges = ea.clone();
                    edges.extend_from_slice(eb);
                    let g = glue(3 * p, &edges);
                    let pairs: Vec<_> = g.chains.iter().map(|&(x, y)| (to_result(x), to_result(y))).collect();
                    let d = PrimitiveDiagram::from_pairs(ports, &pairs).expect("gluing preserves orientation");
                    (d, *ca * *cb, g.loops)
                })
            })
            .collect();
        let mut grouped: BTreeMap<PrimitiveDiagram, Vec<(RadicalCoefficient, u32)>> = BTreeMap::new();
        for (d, c, l) in products {
            grouped.entry(d).or_default().push((c, l));
        }
        let mut terms = BTreeMap::new();
        for (d, items) in grouped {
            accumulate(&mut terms, d, sum_by_loops(items));
        }
        Ok(InvariantElement {
            signature: self.signature.clone(),
            terms,
        })
    }

    /// Close every out port onto its in port.
    pub fn trace(&self) -> Result<RadicalCoefficient> {
        self.require_operator("trace")?;
        let p = self.signature.len();
        let ports = self.signature.ports();
        let items = self.terms.iter().map(|(d, c)| {
            let edges: Vec<_> = d.edges(&ports).into_iter().map(|(x, y)| (x % p, y % p)).collect();
            (c.clone(), glue(p, &edges).loops)
        });
        Ok(sum_by_loops(items))
    }

    /// Trace over the listed slots; the rest keep their relative order.
    pub fn partial_trace(&self, slots: &[usize]) -> Result<Self> {
        self.require_operator("partial_trace")?;
        let p = self.signature.len();
        let mut traced = vec![false; p];
        for &s in slots {
            if s >= p || std::mem::replace(&mut traced[s], true) {
                return Err(Error::OutOfRange(format!("slot {s} of {p}")));
            }
        }
        let kept: Vec<usize> = (0..p).filter(|&s| !traced[s]).collect();
        let q = kept.len();
        let target = LegSignature::operator(kept.iter().map(|&s| self.signature.orientations()[s]).collect());
        // vertices: result endpoints 0..2q, then one per traced slot
        let mut vertex = vec![0; 2 * p];
        let mut t = 0;
        for s in 0..p {
            if traced[s] {
                vertex[s] = 2 * q + t;
                vertex[p + s] = 2 * q + t;
                t += 1;
            }
        }
        for (i, &s) in kept.iter().enumerate() {
            vertex[s] = i;
            vertex[p + s] = q + i;
        }
        let src = self.signature.ports();
        let dst = target.ports();
        let mut grouped: BTreeMap<PrimitiveDiagram, Vec<(RadicalCoefficient, u32)>> = BTreeMap::new();
        for (d, c) in &self.terms {
            let edges: Vec<_> = d.edges(&src).into_iter().map(|(x, y)| (vertex[x], vertex[y])).collect();
            let g = glue(2 * q + slots.len(), &edges);
            let nd = PrimitiveDiagram::from_pairs(&dst, &g.chains)?;
            grouped.entry(nd).or_default().push((c.clone(), g.loops));
        }
        let mut terms = BTreeMap::new();
        for (d, items) in grouped {
            accumulate(&mut terms, d, sum_by_loops(items));
        }
        Ok(InvariantElement {
            signature: target,
            terms,
        })
    }

    /// Hermitian conjugate. Operators are flipped (in and out ports swap);
    /// kets and bras trade roles. Coefficients are real.
    pub fn dagger(&self) -> Self {
        match self.signature.role() {
            Role::Operator => {
                let p = self.signature.len();
                self.relabel(self.signature.clone(), |e| if e < p { e + p } else { e - p })
                    .expect("flip preserves orientation")
            }
            role => InvariantElement {
                signature: self
                    .signature
                    .with_role(if role == Role::Ket { Role::Bra } else { Role::Ket })
                    .expect("legs unchanged"),
                terms: self.terms.clone(),
            },
        }
    }

    /// Juxtaposition: `other`'s slots follow `self`'s.
    pub fn tensor(&self, other: &Self) -> Result<Self> {
        if self.signature.role() != other.signature.role() {
            return Err(Error::MixedRoleTensor);
        }
        let mut o = self.signature.orientations().to_vec();
        o.extend_from_slice(other.signature.orientations());
        let signature = LegSignature::new(o, self.signature.role())?;
        let mut terms = BTreeMap::new();
        for (da, ca) in &self.terms {
            for (db, cb) in &other.terms {
                let d = PrimitiveDiagram::new(da.linking().concat(db.linking()));
                accumulate(&mut terms, d, ca * cb);
            }
        }
        Ok(InvariantElement { signature, terms })
    }

    /// `⟨self|other⟩`: `Tr(self† other)` for operators, full leg gluing for
    /// kets. Linear in `other`, antilinear in `self` (coefficients are real).
    pub fn inner_product(&self, other: &Self) -> Result<RadicalCoefficient> {
        self.check_same(other, "inner_product")?;
        let ports = self.signature.ports();
        let n = self.signature.n_endpoints();
        let b_edges: Vec<_> = other.terms.iter().map(|(d, c)| (d.edges(&ports), c)).collect();
        let items: Vec<(RadicalCoefficient, u32)> = self
            .terms
            .par_iter()
            .flat_map_iter(|(da, ca)| {
                let ea = da.edges(&ports);
                b_edges.iter().map(move |(eb, cb)| {
                    let mut edges = ea.clone();
                    edges.extend_from_slice(eb);
                    (ca * *cb, glue(n, &edges).loops)
                })
            })
            .collect();
        Ok(sum_by_loops(items))
    }

    pub fn norm_squared(&self) -> Result<RadicalCoefficient> {
        self.inner_product(self)
    }

    /// Turn an operator into a ket: out port `s` becomes a leg of the slot's
    /// orientation, in port `s` a leg of the opposite orientation; legs are
    /// then stably sorted fundamental first.
    pub fn bend(&self) -> Result<Self> {
        self.require_operator("bend")?;
        let p = self.signature.len();
        let raw: Vec<Orientation> = self
            .signature
            .orientations()
            .iter()
            .copied()
            .chain(self.signature.orientations().iter().map(|o| o.flip()))
            .collect();
        let mut order: Vec<usize> = (0..2 * p).collect();
        order.sort_by_key(|&e| !raw[e].is_fundamental());
        let mut leg_of = vec![0; 2 * p];
        for (leg, &e) in order.iter().enumerate() {
            leg_of[e] = leg;
        }
        let target = LegSignature::new(order.iter().map(|&e| raw[e]).collect(), Role::Ket)?;
        self.relabel(target, |e| leg_of[e])
    }

    /// Apply an operator to a ket whose legs match its slots.
    pub fn apply(&self, ket: &Self) -> Result<Self> {
        self.require_operator("apply")?;
        ket.require_state("apply")?;
        if self.signature.orientations() != ket.signature.orientations() {
            return Err(Error::SignatureMismatch(format!(
                "apply: {} on {}",
                self.signature, ket.signature
            )));
        }
        let l = ket.signature.len();
        let op_ports = self.signature.ports();
        let ket_ports = ket.signature.ports();
        // op out_s -> s, op in_s -> l+s, ket leg s -> l+s
        let mut grouped: BTreeMap<PrimitiveDiagram, Vec<(RadicalCoefficient, u32)>> = BTreeMap::new();
        for (dk, ck) in &ket.terms {
            let ek: Vec<_> = dk.edges(&ket_ports).into_iter().map(|(x, y)| (x + l, y + l)).collect();
            for (d, c) in &self.terms {
                let mut edges = d.edges(&op_ports);
                edges.extend_from_slice(&ek);
                let g = glue(2 * l, &edges);
                let nd = PrimitiveDiagram::from_pairs(&ket_ports, &g.chains)?;
                grouped.entry(nd).or_default().push((c * ck, g.loops));
            }
        }
        let mut terms = BTreeMap::new();
        for (d, items) in grouped {
            accumulate(&mut terms, d, sum_by_loops(items));
        }
        Ok(InvariantElement {
            signature: ket.signature.with_role(Role::Ket)?,
            terms,
        })
    }

    /// `|ket⟩⟨bra|` as an operator whose slots are the ket legs.
    pub fn outer(ket: &Self, bra: &Self) -> Result<Self> {
        ket.require_state("outer")?;
        ket.check_same(bra, "outer")?;
        let l = ket.signature.len();
        let target = LegSignature::operator(ket.signature.orientations().to_vec());
        let ports = ket.signature.ports();
        let dst = target.ports();
        let mut terms = BTreeMap::new();
        for (dk, ck) in &ket.terms {
            let ek = dk.edges(&ports);
            for (db, cb) in &bra.terms {
                let mut pairs = ek.clone();
                pairs.extend(db.edges(&ports).into_iter().map(|(x, y)| (x + l, y + l)));
                accumulate(&mut terms, PrimitiveDiagram::from_pairs(&dst, &pairs)?, ck * cb);
            }
        }
        Ok(InvariantElement {
            signature: target,
            terms,
        })
    }

    /// Reorder slots: new slot `i` is old slot `order[i]`. `target` must be
    /// the resulting orientation sequence.
    pub fn reorder_legs(&self, order: &[usize], target: &[Orientation]) -> Result<Self> {
        let len = self.signature.len();
        let perm = Perm::from_images(order.to_vec())
            .map_err(|_| Error::OutOfRange(format!("{order:?} is not a reordering of {len} slots")))?;
        if perm.len() != len || target.len() != len {
            return Err(Error::OutOfRange(format!("{order:?} on {len} slots")));
        }
        let old = self.signature.orientations();
        if let Some(i) = (0..len).find(|&i| old[order[i]] != target[i]) {
            return Err(Error::OrientationViolation(format!(
                "slot {} is {:?} but target slot {} is {:?}",
                order[i], old[order[i]], i, target[i]
            )));
        }
        let new_pos = perm.inverse();
        let sig = LegSignature::new(target.to_vec(), self.signature.role())?;
        match self.signature.role() {
            Role::Operator => self.relabel(sig, |e| {
                if e < len {
                    new_pos.apply(e)
                } else {
                    len + new_pos.apply(e - len)
                }
            }),
            _ => self.relabel(sig, |e| new_pos.apply(e)),
        }
    }

    /// Reorder with the orientations carried along.
    pub fn permute_legs(&self, order: &[usize]) -> Result<Self> {
        let old = self.signature.orientations();
        let target: Vec<Orientation> = order
            .iter()
            .map(|&i| {
                old.get(i)
                    .copied()
                    .ok_or_else(|| Error::OutOfRange(format!("slot {i}")))
            })
            .collect::<Result<_>>()?;
        self.reorder_legs(order, &target)
    }
}

impl fmt::Display for InvariantElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        for (i, (d, c)) in self.terms.iter().enumerate() {
            if i > 0 {
                write!(f, " + ")?;
            }
            if c.is_one() {
                write!(f, "{}", d.linking())?;
            } else {
                write!(f, "[{}] {}", c, d.linking())?;
            }
        }
        Ok(())
    }
}
