use crate::input::{list, rational};
use crate::report::{kv, Report, Table};
use crate::{Cli, CliError, CmdResult};
use nilpotent_core::algebra::Mapping;
use nilpotent_core::charges::{
    build_tables, build_tables_from, charge_dirac, composite_weak_charge, count_zeros, fermion_spec, su5_grid,
    tables_from_csv, tables_to_csv, ChargeTable, Composite, Particle, Representation, TableSet,
};
use nilpotent_core::rational::fmt_q;
use serde_json::json;
use std::fmt::Write;

#[derive(Debug, clap::Subcommand)]
pub enum Action {
    /// Charge structure of one fermion, e.g. `--particle s --rep A`.
    Spec {
        #[arg(long)]
        particle: String,
        #[arg(long, default_value = "A")]
        rep: String,
    },
    /// A, B, C or L table, or all four.
    Table {
        #[arg(long, default_value = "all")]
        rep: String,
    },
    /// Candidate zero counts for a multiplet, e.g. `--states uud,udd`.
    Zeros {
        #[arg(long)]
        states: String,
        #[arg(long, default_value = "A,B,C")]
        reps: String,
    },
    /// Weak charge of a baryon or meson, e.g. `--combo us~`.
    Weak {
        #[arg(long)]
        combo: String,
    },
    /// The 5×5 generator grid.
    Grid {
        /// Add the diagonal U(5) generator.
        #[arg(long)]
        extended: bool,
    },
    /// Charge equation rows for given w, s, e.
    Dirac {
        #[arg(long, allow_hyphen_values = true)]
        w: String,
        #[arg(long, allow_hyphen_values = true)]
        s: String,
        #[arg(long, allow_hyphen_values = true)]
        e: String,
        #[arg(long, default_value = "1")]
        mapping: String,
    },
}

fn tables(cli: &Cli) -> Result<TableSet, CliError> {
    let Some(dir) = &cli.data_dir else { return Ok(build_tables()) };
    let path = dir.join("charge_tables.csv");
    match std::fs::read_to_string(&path) {
        Ok(text) => Ok(build_tables_from(&tables_from_csv(&text)?)?),
        Err(e) if e.kind() == std::io::ErrorKind::NotFound => Ok(build_tables()),
        Err(e) => Err(CliError { code: 3, message: format!("{}: {e}", path.display()) }),
    }
}

fn reps(s: &str) -> Result<Vec<Representation>, CliError> {
    if s == "all" {
        return Ok(Representation::ALL.to_vec());
    }
    list(s, |x| x.parse::<Representation>().map_err(|e| CliError::usage(e.to_string())))
}

fn render_table(t: &ChargeTable) -> String {
    let mut out = Table::new(&["flavour", "type", "B", "G", "R"]);
    for r in &t.rows {
        let sign = if r.sign < 0 { "-" } else { "" };
        let mut row = vec![r.flavour.to_string(), format!("{sign}{:?}", r.charge_type).to_lowercase()];
        row.extend(r.cells.iter().map(|c| format!("{}·{}", c.value, format!("{:?}", c.label).to_lowercase())));
        out.push(row);
    }
    format!("table {}\n{}", t.representation, out.render())
}

pub fn run(a: &Action, cli: &Cli) -> CmdResult {
    match a {
        Action::Spec { particle, rep } => {
            let p: Particle = particle.parse()?;
            let r: Representation = rep.parse()?;
            let st = fermion_spec(p, r)?;
            let s = &st.spec;
            let text = kv(&[
                ("particle", st.particle.to_string()),
                ("representation", r.to_string()),
                ("expression", st.expression.clone()),
                ("σ_z, g, m", format!("{}, {}, {}", s.sigma_z, s.g, s.isospin_m)),
                ("axes a, b, c", format!("{:?}, {:?}, {:?}", s.a_idx, s.b_idx, s.c_idx).to_lowercase()),
                ("violation", s.violation_tag.symbol().to_string()),
            ]);
            Ok(Report::new(&st, text))
        }
        Action::Table { rep } => {
            let set = tables(cli)?;
            let wanted = reps(rep)?;
            let picked: Vec<ChargeTable> =
                set.tables.iter().filter(|t| wanted.contains(&t.representation)).cloned().collect();
            let mut text = picked.iter().map(render_table).collect::<Vec<_>>().join("\n\n");
            let notes: Vec<_> = set.discrepancies.iter().filter(|d| wanted.contains(&d.representation)).collect();
            for d in &notes {
                let _ = write!(
                    text,
                    "\nprinted differs: {} {} {:?} {}: printed {}, generated {}",
                    d.representation,
                    d.flavour,
                    d.charge_type,
                    d.colour.map_or("-".into(), |c| format!("{c:?}")),
                    d.printed,
                    d.generated
                );
            }
            let mut r = Report::new(&json!({"tables": picked, "discrepancies": notes}), text);
            r.raw_csv = Some(tables_to_csv(&picked)?);
            Ok(r)
        }
        Action::Zeros { states, reps: rs } => {
            let set = tables(cli)?;
            let states = list(states, |x| x.parse::<Composite>().map_err(CliError::from))?;
            let z = count_zeros(&set, &states, &reps(rs)?)?;
            let join = |s: &std::collections::BTreeSet<u32>| s.iter().map(u32::to_string).collect::<Vec<_>>().join(", ");
            let mut t = Table::new(&["state", "candidates"]);
            for s in &z.per_state {
                t.push(vec![s.state.clone(), join(&s.candidates)]);
            }
            let text = format!("{}\nmultiplet: {}\nground: {}", t.render(), join(&z.candidates), z.ground);
            Ok(Report::new(&z, text).with_table(t))
        }
        Action::Weak { combo } => {
            let c: Composite = combo.parse()?;
            let w = composite_weak_charge(&c)?;
            let kind = c.kind()?;
            let text = format!("{c} ({kind:?}): {w}");
            Ok(Report::new(&json!({"combo": c.to_string(), "kind": kind, "weak": w, "display": w.to_string()}), text))
        }
        Action::Grid { extended } => {
            let gr = su5_grid(*extended);
            let mut header = vec![""];
            header.extend(gr.units.iter().copied());
            let mut t = Table::new(&header);
            for (r, row) in gr.cells.iter().enumerate() {
                let mut cells = vec![gr.units[r].to_string()];
                cells.extend(row.iter().enumerate().map(|(c, l)| if r == c { "·".into() } else { l.symbol().into() }));
                t.push(cells);
            }
            let mut text = t.render();
            for g in &gr.generators {
                if let nilpotent_core::charges::Generator::Diagonal { label, weights } = g {
                    let w: Vec<_> = weights.iter().map(fmt_q).collect();
                    let _ = write!(text, "\ndiagonal {}: ({})", label.symbol(), w.join(", "));
                }
            }
            let _ = write!(text, "\n{} generators", gr.count());
            Ok(Report::new(&json!({"grid": gr, "count": gr.count()}), text).with_table(t))
        }
        Action::Dirac { w, s, e, mapping } => {
            let m: Mapping = match mapping.as_str() {
                "1" => Mapping::One,
                "2" => Mapping::Two,
                o => o.parse()?,
            };
            let d = charge_dirac(rational(w)?, rational(s)?, rational(e)?, m);
            let rows: Vec<_> = d.rows.iter().map(fmt_q).collect();
            let text = format!("rows: {}\nscalar: {}", rows.join(", "), d.scalar);
            Ok(Report::new(&d, text))
        }
    }
}
