use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Parser, Subcommand};
use serde_json::{json, Value};

use orbichi::burnside::{map_rh, orbit_decompose};
use orbichi::class_poset::build_poset;
use orbichi::group_kernel::{are_isomorphic, class_id, subgroups, GroupTable};
use orbichi::grothendieck_ring::{gset_class, specialize};
use orbichi::names::{display_name, factor_names};
use orbichi::orbifold_model::{global_quotient_check, universal_euler};
use orbichi::ph_index::{cone_consistency_check, poincare_hopf_check, BoundaryBehavior};
use orbichi::{io, Caps, Error, ErrorKind, RElement, Specialization};

#[derive(Parser)]
#[command(name = "orbichi", version)]
#[command(about = "Exact universal Euler characteristics and indices on orbifolds")]
struct Cli {
    /// JSON file with resource caps
    #[arg(long, global = true)]
    config: Option<PathBuf>,

    /// Emit JSON instead of text
    #[arg(long, global = true)]
    json: bool,

    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Queries on finite groups
    Group {
        #[command(subcommand)]
        command: GroupCommand,
    },
    /// Universal Euler characteristic of an orbifold and its specializations
    Chi {
        orbifold: PathBuf,
        /// un, chi, es, orb or k:<n>; repeat or separate with commas
        #[arg(long, value_delimiter = ',')]
        hom: Vec<String>,
        /// Leave out boundary strata
        #[arg(long)]
        interior: bool,
    },
    /// Universal index at a cone point, by the direct and the Möbius route
    Index { cone: PathBuf },
    /// Poincaré–Hopf check for a field on an orbifold
    Ph {
        field: PathBuf,
        /// Override the field's boundary behaviour: none, outward or inward
        #[arg(long)]
        boundary: Option<String>,
    },
    /// Class of a finite G-set and its orbit decomposition
    Gset { file: PathBuf },
    /// Subgroup-class poset of a group with its Möbius function
    Poset { group: PathBuf },
}

#[derive(Subcommand)]
enum GroupCommand {
    /// List subgroups
    Subgroups {
        group: PathBuf,
        #[arg(long)]
        up_to_conjugacy: bool,
    },
    /// Test two groups for isomorphism
    Isomorphic { a: PathBuf, b: PathBuf },
    /// Indecomposable direct factors
    Factor { group: PathBuf },
    /// Canonical certificate
    Classid { group: PathBuf },
}

struct Outcome {
    text: String,
    json: Value,
    ok: bool,
}

impl Outcome {
    fn ok(text: String, json: Value) -> Outcome {
        Outcome { text, json, ok: true }
    }
}

fn exit_code(e: &Error) -> u8 {
    match e.kind() {
        ErrorKind::Parse => 2,
        ErrorKind::Validation => 3,
        ErrorKind::Resource => 4,
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(&cli) {
        Ok(out) => {
            if cli.json {
                println!("{}", serde_json::to_string_pretty(&out.json).expect("serializable"));
            } else {
                print!("{}", out.text);
            }
            if out.ok {
                ExitCode::SUCCESS
            } else {
                ExitCode::from(1)
            }
        }
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(exit_code(&e))
        }
    }
}

fn run(cli: &Cli) -> orbichi::Result<Outcome> {
    let caps = match &cli.config {
        Some(p) => io::load_caps(p)?,
        None => Caps::default(),
    };
    match &cli.command {
        Command::Group { command } => cmd_group(command, &caps),
        Command::Chi { orbifold, hom, interior } => cmd_chi(orbifold, hom, *interior, &caps),
        Command::Index { cone } => cmd_index(cone, &caps),
        Command::Ph { field, boundary } => cmd_ph(field, boundary.as_deref(), &caps),
        Command::Gset { file } => cmd_gset(file, &caps),
        Command::Poset { group } => cmd_poset(group, &caps),
    }
}

fn relement_json(r: &RElement) -> Value {
    json!({ "polynomial": r.render(), "terms": r })
}

fn cmd_group(command: &GroupCommand, caps: &Caps) -> orbichi::Result<Outcome> {
    match command {
        GroupCommand::Subgroups { group, up_to_conjugacy } => {
            let g = io::load_group(group, caps)?;
            let subs = subgroups(&g, *up_to_conjugacy);
            let mut text = format!("{} subgroups{}\n", subs.len(), if *up_to_conjugacy { " up to conjugacy" } else { "" });
            let mut rows = Vec::new();
            for h in &subs {
                let name = display_name(&class_id(&h.to_table(&g), caps)?);
                text.push_str(&format!("order {:>3}  {:<10} {:?}\n", h.order(), name, h.elements()));
                rows.push(json!({ "order": h.order(), "class": name, "elements": h.elements() }));
            }
            Ok(Outcome::ok(text, json!({ "count": subs.len(), "subgroups": rows })))
        }
        GroupCommand::Isomorphic { a, b } => {
            let (g1, g2) = (io::load_group(a, caps)?, io::load_group(b, caps)?);
            let witness = are_isomorphic(&g1, &g2);
            let mut text = format!("isomorphic: {}\n", witness.is_some());
            if let Some(w) = &witness {
                text.push_str(&format!("witness: {w:?}\n"));
            }
            Ok(Outcome::ok(text, json!({ "isomorphic": witness.is_some(), "witness": witness })))
        }
        GroupCommand::Factor { group } => {
            let g = io::load_group(group, caps)?;
            let id = class_id(&g, caps)?;
            let factors = id.factors();
            let names = factor_names(&id);
            let shown = if names.is_empty() { "1".to_string() } else { names.join(" x ") };
            let mut text = format!("factors: {shown}\n");
            for (f, n) in factors.iter().zip(&names) {
                text.push_str(&format!("{n} {}\n", f.to_hex()));
            }
            let rows: Vec<Value> =
                factors.iter().zip(&names).map(|(f, n)| json!({ "name": n, "certificate": f.to_hex() })).collect();
            Ok(Outcome::ok(text, json!({ "factors": rows })))
        }
        GroupCommand::Classid { group } => {
            let g = io::load_group(group, caps)?;
            let id = class_id(&g, caps)?;
            let text = format!("{}\nname: {}\norder: {}\n", id.to_hex(), display_name(&id), id.order());
            Ok(Outcome::ok(text, json!({ "certificate": id.to_hex(), "name": display_name(&id), "order": id.order() })))
        }
    }
}

/// `None` stands for the universal characteristic itself.
fn parse_homs(homs: &[String]) -> orbichi::Result<Vec<Option<Specialization>>> {
    if homs.is_empty() {
        return Ok(vec![None, Some(Specialization::Chi), Some(Specialization::EulerSatake)]);
    }
    let mut out = Vec::new();
    for h in homs {
        let parsed = if h.trim() == "un" { None } else { Some(h.parse::<Specialization>()?) };
        if !out.contains(&parsed) {
            out.push(parsed);
        }
    }
    Ok(out)
}

fn cmd_chi(path: &Path, homs: &[String], interior: bool, caps: &Caps) -> orbichi::Result<Outcome> {
    let homs = parse_homs(homs)?;
    let input = io::load_orbifold(path, caps)?;
    let q = input.stratified(caps)?;
    let chi_un = universal_euler(&q, !interior);
    let mut parts = Vec::new();
    let mut values = serde_json::Map::new();
    for h in homs {
        match h {
            None => {
                parts.push(format!("chi_un = {chi_un}"));
                values.insert("chi_un".into(), relement_json(&chi_un));
            }
            Some(s) => {
                let v = specialize(&chi_un, s, caps)?;
                parts.push(format!("{} = {v}", s.label()));
                values.insert(s.label(), json!(v));
            }
        }
    }
    let mut text = parts.join("; ");
    text.push('\n');
    let mut report = json!({ "interior": interior, "values": values });
    if let Some(x) = input.complex() {
        let check = global_quotient_check(x, caps)?;
        if !interior {
            text.push_str(&format!(
                "global quotient: r_H(chi_G) = {}; {}\n",
                check.via_burnside,
                if check.agree { "routes agree" } else { "routes disagree" }
            ));
        }
        report["global_quotient"] = json!(check);
    }
    Ok(Outcome::ok(text, report))
}

fn cmd_index(path: &Path, caps: &Caps) -> orbichi::Result<Outcome> {
    let model = io::load_cone(path, caps)?;
    let report = cone_consistency_check(&model)?;
    let text = if report.agree {
        format!("ind_un = {}; routes agree\n", report.direct)
    } else {
        format!(
            "ind_un (direct) = {}\nind_un (mobius) = {}\nroutes disagree; difference = {}\n",
            report.direct,
            report.mobius,
            &report.direct - &report.mobius
        )
    };
    Ok(Outcome {
        text,
        json: json!({ "agree": report.agree, "direct": relement_json(&report.direct), "mobius": relement_json(&report.mobius) }),
        ok: report.agree,
    })
}

fn cmd_ph(path: &Path, boundary: Option<&str>, caps: &Caps) -> orbichi::Result<Outcome> {
    let boundary = boundary.map(str::parse::<BoundaryBehavior>).transpose()?;
    let field = io::load_field(path, boundary, caps)?;
    let r = poincare_hopf_check(&field, caps)?;
    let target = if r.boundary_behavior == BoundaryBehavior::Inward { "chi_un(interior)" } else { "chi_un" };
    let mut text = format!("{}\n", if r.pass && r.routes_agree { "PASS" } else { "FAIL" });
    text.push_str(&format!("sum of indices = {}\n", r.lhs));
    text.push_str(&format!("{target} = {}\n", r.rhs));
    text.push_str(&format!("difference = {}\n", r.difference));
    for row in &r.specializations {
        text.push_str(&format!("{}: {} = {}\n", row.hom, row.lhs, row.rhs));
    }
    text.push_str(&format!(
        "mobius route: {}\n",
        if r.routes_agree { "agrees".to_string() } else { format!("disagrees ({})", r.lhs_mobius) }
    ));
    Ok(Outcome { ok: r.pass && r.routes_agree, json: json!(r), text })
}

fn cmd_gset(path: &Path, caps: &Caps) -> orbichi::Result<Outcome> {
    let x = io::load_gset(path, caps)?;
    let class = gset_class(&x, caps)?;
    let burnside = orbit_decompose(&x);
    let mut text = format!("class = {class}\norbits = {}\n", x.orbits().len());
    for (h, c) in burnside.terms() {
        let name = display_name(&class_id(&h.to_table(x.group()), caps)?);
        text.push_str(&format!("{c} x [G/{name}] {:?}\n", h.elements()));
    }
    let rh = map_rh(&burnside, caps)?;
    Ok(Outcome::ok(
        text,
        json!({ "class": relement_json(&class), "orbits": x.orbits(), "burnside": burnside, "r_h": relement_json(&rh) }),
    ))
}

fn cmd_poset(path: &Path, caps: &Caps) -> orbichi::Result<Outcome> {
    let g: GroupTable = io::load_group(path, caps)?;
    let poset = build_poset(std::slice::from_ref(&g), caps)?;
    let names: Vec<String> = poset.elements().iter().map(display_name).collect();
    let mut text = format!("{} classes\n", poset.len());
    for (i, n) in names.iter().enumerate() {
        let above: Vec<&str> = (0..poset.len()).filter(|&j| j != i && poset.leq(i, j)).map(|j| names[j].as_str()).collect();
        text.push_str(&format!("{i:>3} {n:<12} below: {}\n", if above.is_empty() { "-".into() } else { above.join(", ") }));
    }
    text.push_str("mu:\n");
    for row in poset.mobius().matrix() {
        text.push_str(&row.iter().map(|v| format!("{v:>3}")).collect::<Vec<_>>().join(""));
        text.push('\n');
    }
    Ok(Outcome::ok(text, poset.to_json()))
}
