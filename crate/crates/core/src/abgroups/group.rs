use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, ToPrimitive, Zero};
use serde::de::Error as _;
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use super::lattice::{image_basis, kernel_basis, solve};
use super::matrix::IntMatrix;
use super::snf::{elementary_divisors, snf};
use crate::error::{Error, Result};

/// `Z^rank ⊕ Z/d₁ ⊕ … ⊕ Z/d_k` with `d₁ | d₂ | …` and every `dᵢ ≥ 2`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Default)]
pub struct FGAbGroup {
    pub rank: usize,
    pub torsion: Vec<BigInt>,
}

impl FGAbGroup {
    pub fn trivial() -> Self {
        FGAbGroup::default()
    }

    pub fn free(rank: usize) -> Self {
        FGAbGroup { rank, torsion: Vec::new() }
    }

    /// `(Z/2)^k`.
    pub fn elementary_two(k: usize) -> Self {
        FGAbGroup { rank: 0, torsion: vec![BigInt::from(2); k] }
    }

    /// Canonical form of `⊕ Z/mᵢ`, where `mᵢ = 0` contributes a copy of `Z`
    /// and `mᵢ = ±1` is dropped.
    pub fn from_cyclic_orders(orders: &[BigInt]) -> Self {
        let m = IntMatrix::from_fn(
            orders.len(),
            orders.len(),
            |i, j| {
                if i == j {
                    orders[i].clone()
                } else {
                    BigInt::zero()
                }
            },
        );
        cokernel(&m)
    }

    pub fn is_trivial(&self) -> bool {
        self.rank == 0 && self.torsion.is_empty()
    }

    /// Direct sum, re-canonicalized.
    pub fn direct_sum(&self, other: &FGAbGroup) -> FGAbGroup {
        let mut orders: Vec<BigInt> = self.torsion.iter().chain(&other.torsion).cloned().collect();
        orders.extend(std::iter::repeat_n(BigInt::zero(), self.rank + other.rank));
        FGAbGroup::from_cyclic_orders(&orders)
    }
}

/// `Z^rows / im(m)`.
pub fn cokernel(m: &IntMatrix) -> FGAbGroup {
    let divs = elementary_divisors(m);
    FGAbGroup { rank: m.rows() - divs.len(), torsion: divs.into_iter().filter(|d| !d.is_one()).collect() }
}

/// `ker(kernel_of) / im(image_of)` for `kernel_of ∘ image_of = 0`.
pub fn subquotient(kernel_of: &IntMatrix, image_of: &IntMatrix) -> Result<FGAbGroup> {
    if kernel_of.cols() != image_of.rows() {
        return Err(Error::Dimension(format!(
            "kernel map has {} columns, image map has {} rows",
            kernel_of.cols(),
            image_of.rows()
        )));
    }
    if !kernel_of.mul(image_of).is_zero() {
        return Err(Error::Containment);
    }
    let k = kernel_basis(kernel_of);
    let coords = solve(&k, image_of).ok_or(Error::Containment)?;
    Ok(cokernel(&coords))
}

/// Finitely presented abelian group `Z^gens / im(relations)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Presentation {
    pub gens: usize,
    pub relations: IntMatrix,
}

/// Coordinates realizing `Presentation ≅ FGAbGroup`: torsion coordinates
/// first (reduced modulo their divisor), then free ones.
#[derive(Clone, Debug)]
pub struct Canonical {
    pub group: FGAbGroup,
    /// `k × gens`: a generator vector's canonical coordinates.
    pub to: IntMatrix,
    /// `gens × k`: representatives of the canonical generators.
    pub from: IntMatrix,
    /// Modulus per canonical coordinate; zero for free coordinates.
    pub moduli: Vec<BigInt>,
}

impl Canonical {
    pub fn coords(&self, v: &[BigInt]) -> Vec<BigInt> {
        let raw = self.to.mul_vec(v);
        raw.into_iter().zip(&self.moduli).map(|(x, m)| if m.is_zero() { x } else { x.mod_floor(m) }).collect()
    }

    /// Additive order of a class; `None` for infinite order.
    pub fn order(&self, v: &[BigInt]) -> Option<BigInt> {
        let c = self.coords(v);
        let mut ord = BigInt::one();
        for (x, m) in c.iter().zip(&self.moduli) {
            if x.is_zero() {
                continue;
            }
            if m.is_zero() {
                return None;
            }
            ord = ord.lcm(&(m / x.gcd(m)));
        }
        Some(ord)
    }
}

impl Presentation {
    pub fn new(gens: usize, relations: IntMatrix) -> Result<Self> {
        if relations.rows() != gens {
            return Err(Error::Dimension(format!(
                "relation matrix has {} rows for {} generators",
                relations.rows(),
                gens
            )));
        }
        Ok(Presentation { gens, relations })
    }

    pub fn free(gens: usize) -> Self {
        Presentation { gens, relations: IntMatrix::zeros(gens, 0) }
    }

    pub fn group(&self) -> FGAbGroup {
        cokernel(&self.relations)
    }

    pub fn canonical(&self) -> Canonical {
        let r = snf(&self.relations);
        let mut keep = Vec::new();
        let mut moduli = Vec::new();
        for i in 0..r.rank {
            let d = &r.s[(i, i)];
            if !d.is_one() {
                keep.push(i);
                moduli.push(d.clone());
            }
        }
        for i in r.rank..self.gens {
            keep.push(i);
            moduli.push(BigInt::zero());
        }
        let to = r.u.select_rows(&keep);
        let from = r.u_inv.select_columns(&keep);
        let group =
            FGAbGroup { rank: self.gens - r.rank, torsion: moduli.iter().filter(|m| !m.is_zero()).cloned().collect() };
        Canonical { group, to, from, moduli }
    }

    /// Whether the class of `v` is zero.
    pub fn is_zero_class(&self, v: &[BigInt]) -> bool {
        self.canonical().coords(v).iter().all(|x| x.is_zero())
    }

    pub fn direct_sum(&self, other: &Presentation) -> Presentation {
        Presentation { gens: self.gens + other.gens, relations: self.relations.block_diag(&other.relations) }
    }
}

/// A homomorphism of presented groups given on generators.
#[derive(Clone, Debug)]
pub struct AbHom {
    pub source: Presentation,
    pub target: Presentation,
    /// `target.gens × source.gens`.
    pub matrix: IntMatrix,
}

impl AbHom {
    /// Checks that relations of the source land in the relation lattice of the
    /// target.
    pub fn new(source: Presentation, target: Presentation, matrix: IntMatrix) -> Result<Self> {
        if matrix.shape() != (target.gens, source.gens) {
            return Err(Error::Dimension(format!(
                "hom matrix {:?} for {} -> {} generators",
                matrix.shape(),
                source.gens,
                target.gens
            )));
        }
        let pushed = matrix.mul(&source.relations);
        if !lattice_contains(&target.relations, &pushed) {
            return Err(Error::IllDefinedHom);
        }
        Ok(AbHom { source, target, matrix })
    }

    /// Lattice of generator vectors whose image vanishes, as a basis.
    pub fn preimage_of_zero(&self) -> IntMatrix {
        let g = self.source.gens;
        let stacked = self.matrix.hstack(&self.target.relations);
        let k = kernel_basis(&stacked);
        let top: Vec<usize> = (0..g).collect();
        image_basis(&k.select_rows(&top))
    }

    pub fn kernel(&self) -> FGAbGroup {
        let p = self.preimage_of_zero();
        let coords = solve(&p, &self.source.relations).expect("relations lie in the kernel");
        cokernel(&coords)
    }

    pub fn cokernel(&self) -> FGAbGroup {
        cokernel(&self.matrix.hstack(&self.target.relations))
    }

    pub fn image(&self) -> FGAbGroup {
        let span = image_basis(&self.matrix.hstack(&self.target.relations));
        let coords = solve(&span, &self.target.relations).expect("relations lie in the span");
        cokernel(&coords)
    }

    pub fn is_injective(&self) -> bool {
        self.kernel().is_trivial()
    }

    pub fn is_surjective(&self) -> bool {
        self.cokernel().is_trivial()
    }

    pub fn is_iso(&self) -> bool {
        self.is_surjective() && self.is_injective()
    }

    /// The map in canonical coordinates of source and target.
    pub fn canonical_matrix(&self) -> IntMatrix {
        let cs = self.source.canonical();
        let ct = self.target.canonical();
        let m = ct.to.mul(&self.matrix).mul(&cs.from);
        IntMatrix::from_fn(m.rows(), m.cols(), |i, j| {
            let md = &ct.moduli[i];
            if md.is_zero() {
                m[(i, j)].clone()
            } else {
                m[(i, j)].mod_floor(md)
            }
        })
    }

    pub fn compose(&self, after: &AbHom) -> Result<AbHom> {
        AbHom::new(self.source.clone(), after.target.clone(), after.matrix.mul(&self.matrix))
    }
}

/// Whether every column of `vectors` lies in the column span of `span`.
pub fn lattice_contains(span: &IntMatrix, vectors: &IntMatrix) -> bool {
    if vectors.cols() == 0 {
        return true;
    }
    let b = image_basis(span);
    solve(&b, vectors).is_some()
}

pub fn lattice_equal(a: &IntMatrix, b: &IntMatrix) -> bool {
    lattice_contains(a, b) && lattice_contains(b, a)
}

impl fmt::Display for FGAbGroup {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_trivial() {
            return write!(f, "0");
        }
        let mut parts = Vec::new();
        if self.rank > 0 {
            parts.push(if self.rank == 1 { "Z".to_string() } else { format!("Z^{}", self.rank) });
        }
        for d in &self.torsion {
            parts.push(format!("Z/{d}"));
        }
        write!(f, "{}", parts.join(" ⊕ "))
    }
}

#[derive(Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct GroupJson {
    rank: usize,
    torsion: Vec<serde_json::Value>,
}

impl Serialize for FGAbGroup {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        let torsion = self
            .torsion
            .iter()
            .map(|d| match d.to_u64() {
                Some(x) => serde_json::Value::from(x),
                None => serde_json::Value::from(d.to_string()),
            })
            .collect();
        GroupJson { rank: self.rank, torsion }.serialize(s)
    }
}

impl<'de> Deserialize<'de> for FGAbGroup {
    fn deserialize<D: Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let raw = GroupJson::deserialize(d)?;
        let mut torsion = Vec::new();
        for v in raw.torsion {
            let x: BigInt = match &v {
                serde_json::Value::Number(n) => {
                    n.as_u64().map(BigInt::from).ok_or_else(|| D::Error::custom("torsion entries must be positive"))?
                }
                serde_json::Value::String(s) => s.parse().map_err(|_| D::Error::custom("bad torsion entry"))?,
                _ => return Err(D::Error::custom("bad torsion entry")),
            };
            torsion.push(x);
        }
        let g = FGAbGroup { rank: raw.rank, torsion };
        let canon = FGAbGroup::from_cyclic_orders(
            &g.torsion.iter().cloned().chain(std::iter::repeat_n(BigInt::zero(), g.rank)).collect::<Vec<_>>(),
        );
        if canon != g {
            return Err(D::Error::custom("group is not in canonical form"));
        }
        Ok(g)
    }
}
