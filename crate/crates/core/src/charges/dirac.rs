use crate::algebra::{gamma_pentad, Mapping, Multivector, Quat};
use crate::rational::{q, Q};
use serde::Serialize;

/// An algebra element plus an isospin-vector part `u↑·(1,0) + u↓·(0,1)`.
#[derive(Debug, Clone, PartialEq)]
struct Entry {
    plain: Multivector,
    iso: [Multivector; 2],
}

impl Entry {
    fn zero() -> Self {
        Entry { plain: Multivector::zero(), iso: [Multivector::zero(), Multivector::zero()] }
    }

    fn plain(x: Multivector) -> Self {
        Entry { plain: x, ..Entry::zero() }
    }

    fn iso(x: Multivector, up: bool) -> Self {
        let mut e = Entry::zero();
        e.iso[if up { 0 } else { 1 }] = x;
        e
    }

    fn add(&self, o: &Entry) -> Entry {
        Entry {
            plain: &self.plain + &o.plain,
            iso: [&self.iso[0] + &o.iso[0], &self.iso[1] + &o.iso[1]],
        }
    }

    /// Isospin vectors contract by dot product.
    fn mul(&self, o: &Entry) -> Entry {
        let mut plain = self.plain.mul(&o.plain);
        for k in 0..2 {
            plain = &plain + &self.iso[k].mul(&o.iso[k]);
        }
        let iso = [0, 1].map(|k| &self.plain.mul(&o.iso[k]) + &self.iso[k].mul(&o.plain));
        Entry { plain, iso }
    }
}

/// Quaternion units for the weak, strong and electric charges, read off a
/// pentad: `γ⁰ = i·k_w`, `γ¹ = i_s·v₁`, `γ⁵ = i·j_e`.
pub fn charge_units(mapping: Mapping) -> [Multivector; 3] {
    let p = gamma_pentad(mapping);
    let minus_i = Multivector::central_i().scale(&q(-1));
    let weak = minus_i.mul(&p.gammas[0]);
    let strong = p.gammas[1].mul(&Multivector::vector(Quat::I));
    let electric = minus_i.mul(&p.gammas[4]);
    [weak, strong, electric]
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct ChargeDirac {
    pub mapping: Mapping,
    /// Scalar part of each row.
    #[serde(serialize_with = "ser_rows")]
    pub rows: [Q; 4],
    /// Every row reduced to a pure scalar with no isospin remainder.
    pub scalar: bool,
}

fn ser_rows<S: serde::Serializer>(r: &[Q; 4], s: S) -> Result<S::Ok, S::Error> {
    s.collect_seq(r.iter().map(crate::rational::fmt_q))
}

/// Matrix times column for the charge equation with the factor i on s and
/// isospin vectors on the e terms.
pub fn charge_dirac(w: Q, s: Q, e: Q, mapping: Mapping) -> ChargeDirac {
    let [k, i_q, j] = charge_units(mapping);
    let ci = Multivector::central_i();
    let kw = Entry::plain(k.scale(&w));
    let is = Entry::plain(ci.mul(&i_q).scale(&s));
    let je = |sign: i64, up: bool| Entry::iso(ci.mul(&j).scale(&(&e * q(sign))), up);
    let neg = |x: &Entry| Entry {
        plain: x.plain.scale(&q(-1)),
        iso: [x.iso[0].scale(&q(-1)), x.iso[1].scale(&q(-1))],
    };
    let z = Entry::zero();
    let m = [
        [kw.clone(), z.clone(), je(-1, true), neg(&is)],
        [z.clone(), kw.clone(), neg(&is), je(1, false)],
        [je(-1, false), is.clone(), neg(&kw), z.clone()],
        [is.clone(), je(1, true), z.clone(), neg(&kw)],
    ];
    let col = [
        kw.add(&is).add(&je(1, true)),
        kw.add(&is).add(&je(-1, false)),
        neg(&kw).add(&neg(&is)).add(&je(1, false)),
        neg(&kw).add(&neg(&is)).add(&je(-1, true)),
    ];
    let mut rows: [Q; 4] = std::array::from_fn(|_| q(0));
    let mut scalar = true;
    for r in 0..4 {
        let mut acc = Entry::zero();
        for c in 0..4 {
            acc = acc.add(&m[r][c].mul(&col[c]));
        }
        scalar &= acc.plain.is_scalar() && acc.iso.iter().all(|x| x.is_zero());
        rows[r] = acc.plain.scalar_part();
    }
    ChargeDirac { mapping, rows, scalar }
}
