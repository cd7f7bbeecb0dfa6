use super::spec::{fermion_spec, Colour, FermionChargeSpec, Flavour, Particle, Representation, Violation};
use crate::{Error, Result};
use serde::{Deserialize, Serialize};
use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;

pub const PRINTED_TABLES: &str = include_str!("../../data/charge_tables.csv");

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum ChargeType {
    E,
    S,
    W,
}

impl ChargeType {
    pub const ALL: [ChargeType; 3] = [ChargeType::E, ChargeType::S, ChargeType::W];

    /// Quaternion unit carrying this charge.
    pub fn unit(self) -> Unit {
        match self {
            ChargeType::E => Unit::J,
            ChargeType::S => Unit::I,
            ChargeType::W => Unit::K,
        }
    }
}

impl FromStr for ChargeType {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        match s.trim() {
            "e" => Ok(ChargeType::E),
            "s" => Ok(ChargeType::S),
            "w" => Ok(ChargeType::W),
            o => Err(Error::UnknownTag(o.to_string())),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Unit {
    I,
    J,
    K,
}

impl FromStr for Unit {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        match s.trim() {
            "i" => Ok(Unit::I),
            "j" => Ok(Unit::J),
            "k" => Ok(Unit::K),
            o => Err(Error::UnknownTag(o.to_string())),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum CellValue {
    #[serde(rename = "0")]
    Zero,
    #[serde(rename = "1")]
    One,
    #[serde(rename = "z_P")]
    ZP,
    #[serde(rename = "z_T")]
    ZT,
}

impl CellValue {
    /// z_P and z_T count as nonzero.
    pub fn is_zero(self) -> bool {
        self == CellValue::Zero
    }

    fn unit_for(v: Violation) -> CellValue {
        match v {
            Violation::None => CellValue::One,
            Violation::P => CellValue::ZP,
            Violation::T => CellValue::ZT,
        }
    }
}

impl fmt::Display for CellValue {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            CellValue::Zero => "0",
            CellValue::One => "1",
            CellValue::ZP => "z_P",
            CellValue::ZT => "z_T",
        })
    }
}

impl FromStr for CellValue {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        match s.trim() {
            "0" => Ok(CellValue::Zero),
            "1" => Ok(CellValue::One),
            "z_P" | "zP" | "z_p" => Ok(CellValue::ZP),
            "z_T" | "zT" | "z_t" => Ok(CellValue::ZT),
            o => Err(Error::Parse(format!("table value `{o}`"))),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct Cell {
    pub value: CellValue,
    pub label: Unit,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "camelCase")]
pub struct ChargeRow {
    pub flavour: Flavour,
    pub charge_type: ChargeType,
    pub sign: i8,
    /// Indexed B, G, R.
    pub cells: [Cell; 3],
}

impl ChargeRow {
    pub fn nonzero(&self) -> usize {
        self.cells.iter().filter(|c| !c.value.is_zero()).count()
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ChargeTable {
    pub representation: Representation,
    pub rows: Vec<ChargeRow>,
}

impl ChargeTable {
    pub fn row(&self, f: Flavour, t: ChargeType) -> Option<&ChargeRow> {
        self.rows.iter().find(|r| r.flavour == f && r.charge_type == t)
    }

    /// Zero cells at one colour column across the e, s, w rows.
    pub fn zeros_at(&self, f: Flavour, colour: Colour) -> Result<u32> {
        ChargeType::ALL
            .iter()
            .map(|t| {
                self.row(f, *t)
                    .map(|r| r.cells[colour.index()].value.is_zero() as u32)
                    .ok_or_else(|| Error::InvalidInput(format!("{f} is not in table {}", self.representation)))
            })
            .sum()
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
#[serde(rename_all = "camelCase")]
pub struct Discrepancy {
    pub representation: Representation,
    pub flavour: Flavour,
    pub charge_type: ChargeType,
    pub colour: Option<Colour>,
    pub printed: String,
    pub generated: String,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct TableSet {
    pub tables: Vec<ChargeTable>,
    pub discrepancies: Vec<Discrepancy>,
}

impl TableSet {
    pub fn get(&self, rep: Representation) -> &ChargeTable {
        self.tables.iter().find(|t| t.representation == rep).expect("all four tables are built")
    }
}

/// Values and signs of the e, s, w rows from the unified formula. Zero cells
/// get no label here.
pub fn generate_rows(spec: &FermionChargeSpec) -> [(ChargeType, i8, [CellValue; 3]); 3] {
    let unit_at = |axis, v| {
        let mut cells = [CellValue::Zero; 3];
        cells[Colour::from_axis(axis).index()] = v;
        cells
    };
    let flip = -spec.sigma_z;
    let e = if spec.filled_vacuum() {
        let mut c = [CellValue::One; 3];
        c[Colour::from_axis(spec.b_idx).index()] = CellValue::Zero;
        (ChargeType::E, flip, c)
    } else {
        (ChargeType::E, -flip, unit_at(spec.b_idx, CellValue::One))
    };
    let s = if spec.is_lepton() {
        (ChargeType::S, flip, [CellValue::Zero; 3])
    } else {
        (ChargeType::S, flip, unit_at(spec.a_idx, CellValue::One))
    };
    let w_sign = if spec.violation_tag == Violation::None { flip } else { -flip };
    let w = (ChargeType::W, w_sign, unit_at(spec.c_idx, CellValue::unit_for(spec.violation_tag)));
    [e, s, w]
}

fn flavours(rep: Representation) -> [Flavour; 6] {
    if rep == Representation::L {
        Flavour::LEPTONS
    } else {
        Flavour::QUARKS
    }
}

/// Regenerates one table. Nonzero cells carry their charge's unit; zero cells
/// carry whatever unit `labels` has at that position, else the first unit
/// not used in the column.
pub fn generate_table(rep: Representation, labels: Option<&ChargeTable>) -> Result<ChargeTable> {
    let mut rows = Vec::new();
    for f in flavours(rep) {
        let st = fermion_spec(Particle::new(f), rep)?;
        let gen = generate_rows(&st.spec);
        let mut block: Vec<ChargeRow> = gen
            .iter()
            .map(|(t, sign, vals)| ChargeRow {
                flavour: f,
                charge_type: *t,
                sign: *sign,
                cells: [0, 1, 2].map(|i| Cell { value: vals[i], label: t.unit() }),
            })
            .collect();
        for col in 0..3 {
            let used: Vec<Unit> =
                block.iter().filter(|r| !r.cells[col].value.is_zero()).map(|r| r.cells[col].label).collect();
            let mut free = [Unit::I, Unit::J, Unit::K].into_iter().filter(|u| !used.contains(u));
            for r in block.iter_mut().filter(|r| r.cells[col].value.is_zero()) {
                let printed = labels.and_then(|t| t.row(f, r.charge_type)).map(|p| p.cells[col].label);
                r.cells[col].label = match printed {
                    Some(l) => l,
                    None => free.next().unwrap_or(Unit::I),
                };
            }
        }
        rows.extend(block);
    }
    Ok(ChargeTable { representation: rep, rows })
}

#[derive(Debug, Serialize, Deserialize)]
#[serde(rename_all = "camelCase")]
struct CsvRecord {
    representation: Representation,
    flavour: String,
    charge_type: String,
    sign: String,
    colour: Colour,
    value: String,
    quaternion_label: String,
}

pub fn tables_from_csv(text: &str) -> Result<Vec<ChargeTable>> {
    let mut rdr = csv::Reader::from_reader(text.as_bytes());
    let mut rows: BTreeMap<(Representation, usize), ChargeRow> = BTreeMap::new();
    let mut order: BTreeMap<Representation, Vec<(Flavour, ChargeType)>> = BTreeMap::new();
    for rec in rdr.deserialize::<CsvRecord>() {
        let rec = rec.map_err(|e| Error::Data(e.to_string()))?;
        let f: Flavour = rec.flavour.parse()?;
        let t: ChargeType = rec.charge_type.parse()?;
        let sign = match rec.sign.trim() {
            "+" => 1,
            "-" | "−" => -1,
            o => return Err(Error::Data(format!("sign `{o}`"))),
        };
        let keys = order.entry(rec.representation).or_default();
        let idx = match keys.iter().position(|k| *k == (f, t)) {
            Some(i) => i,
            None => {
                keys.push((f, t));
                keys.len() - 1
            }
        };
        let cell = Cell { value: rec.value.parse()?, label: rec.quaternion_label.parse()? };
        let row = rows.entry((rec.representation, idx)).or_insert(ChargeRow {
            flavour: f,
            charge_type: t,
            sign,
            cells: [Cell { value: CellValue::Zero, label: Unit::I }; 3],
        });
        if row.sign != sign {
            return Err(Error::Data(format!("inconsistent sign for {f} {t:?}")));
        }
        row.cells[rec.colour.index()] = cell;
    }
    let mut tables: Vec<ChargeTable> = Vec::new();
    for ((rep, _), row) in rows {
        match tables.iter_mut().find(|t| t.representation == rep) {
            Some(t) => t.rows.push(row),
            None => tables.push(ChargeTable { representation: rep, rows: vec![row] }),
        }
    }
    Ok(tables)
}

pub fn tables_to_csv(tables: &[ChargeTable]) -> Result<String> {
    let mut w = csv::Writer::from_writer(Vec::new());
    for t in tables {
        for r in &t.rows {
            for c in Colour::ALL {
                let cell = r.cells[c.index()];
                w.serialize(CsvRecord {
                    representation: t.representation,
                    flavour: r.flavour.to_string(),
                    charge_type: format!("{:?}", r.charge_type).to_lowercase(),
                    sign: if r.sign > 0 { "+".into() } else { "-".into() },
                    colour: c,
                    value: cell.value.to_string(),
                    quaternion_label: format!("{:?}", cell.label).to_lowercase(),
                })
                .map_err(|e| Error::Data(e.to_string()))?;
            }
        }
    }
    String::from_utf8(w.into_inner().map_err(|e| Error::Data(e.to_string()))?).map_err(|e| Error::Data(e.to_string()))
}

pub fn printed_tables() -> Result<Vec<ChargeTable>> {
    tables_from_csv(PRINTED_TABLES)
}

/// Differences between a generated table and a printed one.
pub fn compare(generated: &ChargeTable, printed: &ChargeTable) -> Vec<Discrepancy> {
    let mut out = Vec::new();
    for g in &generated.rows {
        let d = |colour, was: String, now: String| Discrepancy {
            representation: generated.representation,
            flavour: g.flavour,
            charge_type: g.charge_type,
            colour,
            printed: was,
            generated: now,
        };
        let Some(p) = printed.row(g.flavour, g.charge_type) else {
            out.push(d(None, "missing".into(), "row".into()));
            continue;
        };
        if p.sign != g.sign {
            out.push(d(None, format!("sign {}", p.sign), format!("sign {}", g.sign)));
        }
        for c in Colour::ALL {
            let (a, b) = (p.cells[c.index()], g.cells[c.index()]);
            if a != b {
                out.push(d(Some(c), format!("{}{:?}", a.value, a.label), format!("{}{:?}", b.value, b.label)));
            }
        }
    }
    out
}

/// All four tables from the formula, with zero-cell labels and a
/// discrepancy log taken against the printed tables.
pub fn build_tables() -> TableSet {
    build_tables_from(&printed_tables().expect("bundled charge tables parse")).expect("bundled tables build")
}

/// As [`build_tables`], against caller-supplied printed tables.
pub fn build_tables_from(printed: &[ChargeTable]) -> Result<TableSet> {
    let mut tables = Vec::new();
    let mut discrepancies = Vec::new();
    for rep in Representation::ALL {
        let p = printed.iter().find(|t| t.representation == rep);
        let g = generate_table(rep, p)?;
        if let Some(p) = p {
            discrepancies.extend(compare(&g, p));
        }
        tables.push(g);
    }
    Ok(TableSet { tables, discrepancies })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn cells(t: &ChargeTable, f: Flavour, c: ChargeType) -> String {
        t.row(f, c)
            .unwrap()
            .cells
            .iter()
            .map(|c| format!("{}{}", c.value, format!("{:?}", c.label).to_lowercase()))
            .collect::<Vec<_>>()
            .join(" ")
    }

    #[test]
    fn printed_spot_cells() {
        let set = build_tables();
        assert_eq!(cells(set.get(Representation::A), Flavour::U, ChargeType::E), "1j 1j 0i");
        assert_eq!(set.get(Representation::A).row(Flavour::U, ChargeType::E).unwrap().sign, 1);
        let l = set.get(Representation::L);
        let e = l.row(Flavour::E, ChargeType::E).unwrap();
        assert_eq!((e.sign, e.nonzero()), (-1, 1));
        assert_eq!(cells(l, Flavour::E, ChargeType::E), "0i 0k 1j");
        assert_eq!(cells(set.get(Representation::B), Flavour::C, ChargeType::W), "z_Pk 0i 0j");
        assert_eq!(set.get(Representation::C).row(Flavour::B, ChargeType::W).unwrap().sign, -1);
    }

    #[test]
    fn generator_matches_print() {
        let set = build_tables();
        assert!(set.discrepancies.is_empty(), "{:?}", set.discrepancies);
        assert_eq!(set.tables.len(), 4);
        assert!(set.tables.iter().all(|t| t.rows.len() == 18));
    }

    #[test]
    fn one_unit_per_type() {
        for t in build_tables().tables {
            for r in &t.rows {
                let n = r.nonzero();
                let ok = match r.charge_type {
                    // isospin up fills the two other colours
                    ChargeType::E if r.flavour.isospin_up() => n == 2,
                    ChargeType::S if !r.flavour.is_quark() => n == 0,
                    _ => n == 1,
                };
                assert!(ok, "{} {:?} {:?}", t.representation, r.flavour, r.charge_type);
            }
        }
    }

    #[test]
    fn regeneration_idempotent() {
        let once = build_tables();
        let twice = build_tables();
        assert_eq!(once, twice);
        let csv = tables_to_csv(&once.tables).unwrap();
        let back = tables_from_csv(&csv).unwrap();
        assert_eq!(back, once.tables);
        for t in &back {
            assert_eq!(&generate_table(t.representation, Some(t)).unwrap(), t);
        }
        assert_eq!(csv, PRINTED_TABLES);
    }

    #[test]
    fn anti_rows_flip_signs() {
        let f = fermion_spec(Particle::anti(Flavour::U), Representation::A).unwrap();
        let rows = generate_rows(&f.spec);
        assert_eq!(rows.map(|r| r.1), [-1, -1, -1]);
        let s = fermion_spec(Particle::new(Flavour::S), Representation::A).unwrap();
        assert_eq!(generate_rows(&s.spec).map(|r| r.1), [-1, 1, -1]);
    }

    #[test]
    fn bad_csv() {
        assert!(tables_from_csv("representation,flavour,chargeType,sign,colour,value,quaternionLabel\nA,q,e,+,B,1,j\n").is_err());
        assert!(tables_from_csv("representation,flavour,chargeType,sign,colour,value,quaternionLabel\nA,u,e,+,B,2,j\n").is_err());
    }
}
