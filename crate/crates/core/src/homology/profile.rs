use std::collections::BTreeMap;
use std::fmt;

use serde::{Deserialize, Serialize};

/// One reduced homology group `Z^betti ⊕ Z/t_1 ⊕ ... ⊕ Z/t_k`.
#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct Group {
    pub betti: u64,
    pub torsion: Vec<u64>,
}

impl Group {
    pub fn is_zero(&self) -> bool {
        self.betti == 0 && self.torsion.is_empty()
    }
}

impl fmt::Display for Group {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut parts = Vec::new();
        match self.betti {
            0 => {}
            1 => parts.push("Z".to_string()),
            b => parts.push(format!("Z^{b}")),
        }
        parts.extend(self.torsion.iter().map(|t| format!("Z/{t}")));
        if parts.is_empty() {
            f.write_str("0")
        } else {
            f.write_str(&parts.join("+"))
        }
    }
}

/// Reduced integral homology by dimension, starting at −1.
///
/// Dimensions that are absent are zero. Equality ignores explicitly stored
/// zero groups.
#[derive(Clone, Debug, Default)]
pub struct HomologyProfile {
    groups: BTreeMap<i32, Group>,
}

impl HomologyProfile {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn set(&mut self, q: i32, betti: u64, torsion: Vec<u64>) {
        self.groups.insert(q, Group { betti, torsion });
    }

    pub fn add_betti(&mut self, q: i32, betti: u64) {
        if betti > 0 {
            self.groups.entry(q).or_default().betti += betti;
        }
    }

    pub fn group(&self, q: i32) -> Group {
        self.groups.get(&q).cloned().unwrap_or_default()
    }

    pub fn betti(&self, q: i32) -> u64 {
        self.groups.get(&q).map_or(0, |g| g.betti)
    }

    pub fn torsion(&self, q: i32) -> &[u64] {
        self.groups.get(&q).map_or(&[], |g| g.torsion.as_slice())
    }

    /// Every stored dimension, zero groups included.
    pub fn dims(&self) -> impl Iterator<Item = (i32, &Group)> {
        self.groups.iter().map(|(&q, g)| (q, g))
    }

    /// Dimensions with a nonzero group.
    pub fn support(&self) -> Vec<i32> {
        self.groups
            .iter()
            .filter(|(_, g)| !g.is_zero())
            .map(|(&q, _)| q)
            .collect()
    }

    pub fn is_trivial(&self) -> bool {
        self.groups.values().all(Group::is_zero)
    }

    pub fn has_torsion(&self) -> bool {
        self.groups.values().any(|g| !g.torsion.is_empty())
    }

    /// `Σ (-1)^q betti_q`; equals the reduced Euler characteristic when the
    /// profile covers every dimension of the complex.
    pub fn euler(&self) -> i64 {
        self.groups
            .iter()
            .map(|(&q, g)| if q.rem_euclid(2) == 0 { g.betti as i64 } else { -(g.betti as i64) })
            .sum()
    }

    /// The same groups `k` dimensions higher.
    pub fn shifted(&self, k: i32) -> Self {
        Self {
            groups: self.groups.iter().map(|(&q, g)| (q + k, g.clone())).collect(),
        }
    }

    /// Nonzero groups whose dimension lies in `lo..=hi`.
    pub fn restricted(&self, lo: i32, hi: i32) -> Self {
        Self {
            groups: self
                .groups
                .range(lo..=hi)
                .filter(|(_, g)| !g.is_zero())
                .map(|(&q, g)| (q, g.clone()))
                .collect(),
        }
    }

    /// First dimension (ascending) where the two profiles differ.
    pub fn first_difference(&self, other: &Self) -> Option<(i32, Group, Group)> {
        let dims: std::collections::BTreeSet<i32> =
            self.groups.keys().chain(other.groups.keys()).copied().collect();
        dims.into_iter()
            .map(|q| (q, self.group(q), other.group(q)))
            .find(|(_, a, b)| a != b)
    }

    /// Sum of the Betti parts (torsion of `other` is appended).
    pub fn direct_sum(&self, other: &Self) -> Self {
        let mut out = self.clone();
        for (&q, g) in &other.groups {
            let e = out.groups.entry(q).or_default();
            e.betti += g.betti;
            e.torsion.extend(g.torsion.iter().copied());
            e.torsion.sort_unstable();
        }
        out
    }
}

impl PartialEq for HomologyProfile {
    fn eq(&self, other: &Self) -> bool {
        self.first_difference(other).is_none()
    }
}

impl Eq for HomologyProfile {}

impl fmt::Display for HomologyProfile {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self
            .groups
            .iter()
            .filter(|(_, g)| !g.is_zero())
            .map(|(q, g)| format!("H{q}={g}"))
            .collect();
        if parts.is_empty() {
            f.write_str("acyclic")
        } else {
            f.write_str(&parts.join(", "))
        }
    }
}

#[derive(Serialize, Deserialize)]
struct ProfileJson {
    dims: BTreeMap<i32, Group>,
    euler: i64,
}

impl Serialize for HomologyProfile {
    fn serialize<S: serde::Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        ProfileJson {
            dims: self.groups.clone(),
            euler: self.euler(),
        }
        .serialize(s)
    }
}

impl<'de> Deserialize<'de> for HomologyProfile {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> Result<Self, D::Error> {
        let raw = ProfileJson::deserialize(d)?;
        Ok(Self { groups: raw.dims })
    }
}

/// Sphere dimension to number of copies in a wedge of spheres.
#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct WedgeDescriptor(pub BTreeMap<i32, u64>);

impl WedgeDescriptor {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn sphere(q: i32) -> Self {
        Self::new().with(q, 1)
    }

    /// Adds `copies` spheres of dimension `q`; zero copies are ignored.
    pub fn with(mut self, q: i32, copies: u64) -> Self {
        if copies > 0 {
            *self.0.entry(q).or_default() += copies;
        }
        self
    }

    pub fn wedge(mut self, other: &Self) -> Self {
        for (&q, &c) in &other.0 {
            self = self.with(q, c);
        }
        self
    }

    /// Reduced homology of the wedge.
    pub fn to_profile(&self) -> HomologyProfile {
        let mut p = HomologyProfile::new();
        for (&q, &c) in &self.0 {
            p.add_betti(q, c);
        }
        p
    }

    /// Suspension shifts every sphere up by one.
    pub fn suspended(&self) -> Self {
        Self(self.0.iter().map(|(&q, &c)| (q + 1, c)).collect())
    }

    /// Join of wedges: `S^p * S^q = S^{p+q+1}`, distributing over wedges.
    pub fn join(&self, other: &Self) -> Self {
        let mut out = Self::new();
        for (&p, &a) in &self.0 {
            for (&q, &b) in &other.0 {
                out = out.with(p + q + 1, a * b);
            }
        }
        out
    }
}

impl fmt::Display for WedgeDescriptor {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0.is_empty() {
            return f.write_str("point");
        }
        let parts: Vec<String> = self
            .0
            .iter()
            .rev()
            .map(|(q, c)| if *c == 1 { format!("S^{q}") } else { format!("{c}xS^{q}") })
            .collect();
        f.write_str(&parts.join(" v "))
    }
}

/// Why a profile is not that of a connected wedge of spheres.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct WedgeRejection {
    pub dim: i32,
    pub reason: &'static str,
}

/// Reads a torsion-free profile of a connected nonempty complex as a wedge
/// of spheres.
pub fn profile_as_wedge(p: &HomologyProfile) -> Result<WedgeDescriptor, WedgeRejection> {
    let mut w = WedgeDescriptor::new();
    for (q, g) in p.dims() {
        if !g.torsion.is_empty() {
            return Err(WedgeRejection { dim: q, reason: "torsion" });
        }
        if q <= 0 && g.betti > 0 {
            let reason = if q < 0 { "empty complex" } else { "disconnected" };
            return Err(WedgeRejection { dim: q, reason });
        }
        w = w.with(q, g.betti);
    }
    Ok(w)
}
