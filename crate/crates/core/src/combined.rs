//! The product coloring of `K_{q²}`: CFLS colors on embedded bit strings
//! times algebraic colors on the vectors themselves.

use std::fmt;
use std::io::Write;

use serde::{Deserialize, Serialize};

use crate::algebraic::{chi, AlgColor, Vector2};
use crate::cfls::{self, phi, BitVertex, CflsColor};
use crate::coloring::{EdgeColoring, Interner};
use crate::error::{Error, Result};
use crate::field::FieldSpec;

/// Smallest `β ≥ 1` with `2·ceil(log2 q) ≤ β²`.
pub fn choose_beta(q: u32) -> usize {
    let bits = if q <= 1 {
        0
    } else {
        (u32::BITS - (q - 1).leading_zeros()) as usize
    };
    let mut beta = 1;
    while beta * beta < 2 * bits {
        beta += 1;
    }
    beta
}

/// `(x1', x2', 0…0)`: ranks of both coordinates in `ceil(log2 q)` bits each,
/// padded with zeros to β² bits.
pub fn embed(v: &Vector2, field: &FieldSpec, beta: usize) -> Result<BitVertex> {
    let bits = field.rank_bits() as usize;
    let len = beta * beta;
    if 2 * bits > len {
        return Err(Error::InvalidParameter(format!(
            "β = {beta} too small for q = {}",
            field.modulus()
        )));
    }
    let value = ((v.x1.rank() as u64) << (len - bits)) | ((v.x2.rank() as u64) << (len - 2 * bits));
    BitVertex::new(beta, value)
}

#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct ProductColor {
    pub cfls: CflsColor,
    pub alg: AlgColor,
}

impl fmt::Display for ProductColor {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "phi={} chi={}", self.cfls, self.alg)
    }
}

/// Which factor of the product a coloring view keeps.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Projection {
    Phi,
    Chi,
    Product,
}

impl fmt::Display for Projection {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Projection::Phi => "phi",
            Projection::Chi => "chi",
            Projection::Product => "product",
        })
    }
}

pub fn color_edge(
    u: &Vector2,
    v: &Vector2,
    field: &FieldSpec,
    beta: usize,
) -> Result<ProductColor> {
    Ok(ProductColor {
        cfls: phi(&embed(u, field, beta)?, &embed(v, field, beta)?)?,
        alg: chi(u, v)?,
    })
}

/// Upper bound `8q · β^{β+1} · 2^{3β}` on the colors of the product.
pub fn upper_bound(q: u32, beta: usize) -> u128 {
    8 * q as u128 * cfls::color_bound(beta)
}

/// A fully materialized coloring of `K_{q²}`.
#[derive(Clone, Debug)]
pub struct Construction {
    field: FieldSpec,
    beta: usize,
    vertices: Vec<Vector2>,
    embedding: Vec<BitVertex>,
    coloring: EdgeColoring,
    dictionary: Vec<ProductColor>,
}

impl Construction {
    pub fn build(q: u32) -> Result<Self> {
        let field = FieldSpec::new(q)?;
        let beta = choose_beta(q);
        let vertices = Vector2::all(&field);
        let embedding = vertices
            .iter()
            .map(|v| embed(v, &field, beta))
            .collect::<Result<Vec<_>>>()?;
        let n = vertices.len();
        let mut interner = Interner::new();
        let mut coloring = EdgeColoring::new(n);
        for u in 0..n {
            for v in u + 1..n {
                let color = ProductColor {
                    cfls: phi(&embedding[u], &embedding[v])?,
                    alg: chi(&vertices[u], &vertices[v])?,
                };
                coloring.set(u, v, interner.intern(color));
            }
        }
        Ok(Construction {
            field,
            beta,
            vertices,
            embedding,
            coloring,
            dictionary: interner.into_values(),
        })
    }

    pub fn q(&self) -> u32 {
        self.field.modulus()
    }

    pub fn field(&self) -> &FieldSpec {
        &self.field
    }

    pub fn beta(&self) -> usize {
        self.beta
    }

    pub fn n(&self) -> usize {
        self.vertices.len()
    }

    pub fn vertices(&self) -> &[Vector2] {
        &self.vertices
    }

    pub fn embedding(&self) -> &[BitVertex] {
        &self.embedding
    }

    pub fn coloring(&self) -> &EdgeColoring {
        &self.coloring
    }

    pub fn dictionary(&self) -> &[ProductColor] {
        &self.dictionary
    }

    pub fn color_count(&self) -> usize {
        self.dictionary.len()
    }

    pub fn upper_bound(&self) -> u128 {
        upper_bound(self.q(), self.beta)
    }

    /// The coloring seen through one factor, with that factor's colors
    /// re-interned densely in row-major edge order.
    pub fn projection(&self, which: Projection) -> EdgeColoring {
        match which {
            Projection::Product => self.coloring.clone(),
            Projection::Phi => {
                let mut ids = Interner::new();
                let map: Vec<u32> = self
                    .dictionary
                    .iter()
                    .map(|c| ids.intern(c.cfls.clone()))
                    .collect();
                EdgeColoring::from_fn(self.n(), |u, v| map[self.coloring.get(u, v) as usize])
            }
            Projection::Chi => {
                let mut ids = Interner::new();
                let map: Vec<u32> = self.dictionary.iter().map(|c| ids.intern(c.alg)).collect();
                EdgeColoring::from_fn(self.n(), |u, v| map[self.coloring.get(u, v) as usize])
            }
        }
    }

    pub fn header(&self) -> String {
        format!(
            "# q={} n={} beta={} colors={}",
            self.q(),
            self.n(),
            self.beta,
            self.color_count()
        )
    }

    pub fn write_export<W: Write>(&self, w: W) -> Result<()> {
        self.coloring.write_export(&self.header(), w)
    }

    /// One `id color` line per dictionary entry, ids ascending.
    pub fn write_dictionary<W: Write>(&self, mut w: W) -> Result<()> {
        let mut buf = String::new();
        buf.push_str(&self.header());
        buf.push('\n');
        for (id, c) in self.dictionary.iter().enumerate() {
            buf.push_str(&format!("{id} {c}\n"));
        }
        w.write_all(buf.as_bytes())?;
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebraic::{chi1, chi2, AlgModColor, StLabel};

    #[test]
    fn beta_examples() {
        assert_eq!(choose_beta(3), 2);
        assert_eq!(choose_beta(5), 3);
        assert_eq!(choose_beta(7), 3);
        assert_eq!(choose_beta(11), 3);
        assert_eq!(choose_beta(13), 3);
        assert_eq!(choose_beta(17), 4);
    }

    #[test]
    fn embed_examples() {
        let f = FieldSpec::new(5).unwrap();
        let e = |a, b| {
            embed(&Vector2::from_values(&f, a, b), &f, 3)
                .unwrap()
                .to_string()
        };
        assert_eq!(e(0, 0), "000000000");
        assert_eq!(e(1, 2), "001010000");
        assert_eq!(e(4, 4), "100100000");
    }

    #[test]
    fn color_edge_composes_factors() {
        let f = FieldSpec::new(5).unwrap();
        let u = Vector2::from_values(&f, 1, 2);
        let v = Vector2::from_values(&f, 3, 4);
        let c = color_edge(&u, &v, &f, 3).unwrap();
        assert_eq!(c, color_edge(&v, &u, &f, 3).unwrap());
        assert_eq!(c.alg.base, chi1(&u, &v).unwrap());
        assert_eq!(c.alg.modifier, AlgModColor(StLabel::S, StLabel::T));
        assert_eq!(c.alg.modifier, chi2(&u, &v).unwrap());
        assert_eq!(c.cfls.to_string(), "((1,{001,011}),(2,1,0),(+,+,+))");
        assert!(color_edge(&u, &u, &f, 3).is_err());
    }

    #[test]
    fn embedding_preserves_order() {
        for q in [3u32, 5, 7, 11, 13] {
            let c = Construction::build(q).unwrap();
            let emb = c.embedding();
            for i in 0..c.n() {
                for j in 0..c.n() {
                    assert_eq!(c.vertices()[i] < c.vertices()[j], emb[i] < emb[j]);
                }
            }
        }
    }

    #[test]
    fn build_sizes() {
        for (q, n, edges) in [(3u32, 9usize, 36usize), (5, 25, 300), (7, 49, 1176)] {
            let c = Construction::build(q).unwrap();
            assert_eq!(c.n(), n);
            assert_eq!(c.coloring().edge_colors().len(), edges);
            assert!(c.coloring().is_symmetric());
            assert!((c.color_count() as u128) <= c.upper_bound());
        }
        assert!(matches!(
            Construction::build(9),
            Err(Error::InvalidModulus(9))
        ));
        assert!(Construction::build(2).is_err());
    }

    #[test]
    fn ids_are_first_seen_in_row_major_order() {
        let c = Construction::build(5).unwrap();
        let mut next = 0;
        for col in c.coloring().edge_colors() {
            assert!(col <= next);
            if col == next {
                next += 1;
            }
        }
        assert_eq!(next as usize, c.color_count());
    }

    #[test]
    fn same_chi_different_phi_get_distinct_ids() {
        let c = Construction::build(5).unwrap();
        let n = c.n();
        let mut found = false;
        'outer: for u in 0..n {
            for v in u + 1..n {
                for w in v + 1..n {
                    let (a, b) = (c.coloring().get(u, v), c.coloring().get(u, w));
                    let (da, db) = (&c.dictionary()[a as usize], &c.dictionary()[b as usize]);
                    if da.alg == db.alg && da.cfls != db.cfls {
                        assert_ne!(a, b);
                        found = true;
                        break 'outer;
                    }
                }
            }
        }
        assert!(found);
    }

    #[test]
    fn projections_are_coarser_than_product() {
        let c = Construction::build(5).unwrap();
        let phi = c.projection(Projection::Phi);
        let chi = c.projection(Projection::Chi);
        let prod = c.coloring();
        let n = c.n();
        let edges: Vec<(usize, usize)> = (0..n)
            .flat_map(|u| (u + 1..n).map(move |v| (u, v)))
            .collect();
        for &(a, b) in edges.iter().step_by(7) {
            for &(x, y) in edges.iter().step_by(5) {
                if prod.get(a, b) == prod.get(x, y) {
                    assert_eq!(phi.get(a, b), phi.get(x, y));
                    assert_eq!(chi.get(a, b), chi.get(x, y));
                }
                assert_eq!(
                    prod.get(a, b) == prod.get(x, y),
                    phi.get(a, b) == phi.get(x, y) && chi.get(a, b) == chi.get(x, y)
                );
            }
        }
    }

    #[test]
    fn export_is_deterministic_and_loadable() {
        let render = || {
            let c = Construction::build(5).unwrap();
            let mut e = Vec::new();
            let mut d = Vec::new();
            c.write_export(&mut e).unwrap();
            c.write_dictionary(&mut d).unwrap();
            (e, d)
        };
        let (e1, d1) = render();
        let (e2, d2) = render();
        assert_eq!(e1, e2);
        assert_eq!(d1, d2);
        let text = String::from_utf8(e1.clone()).unwrap();
        assert!(text.starts_with("# q=5 n=25 beta=3 colors="));
        assert_eq!(text.lines().count(), 301);
        let loaded = EdgeColoring::read_export(&e1[..]).unwrap();
        assert_eq!(&loaded, Construction::build(5).unwrap().coloring());
    }
}
