//! Evaluation of one request: parse the document, call the library, collect
//! the result together with the rules and warnings behind it.

use relchow::abgroup::{cokernel, smith_normal_form, FgAbGroup, GroupExpr, Presentation};
use relchow::algebra_lab::{
    count_simples, cyclic_wedderburn_oracle, jacobson_radical, k0_finite_length, nilpotency_index,
};
use relchow::classgroups::{cyclotomic_class_group, FormClassTable};
use relchow::exactseq::{check_split_surjective, chow_from_bracket, chow_from_cokernel};
use relchow::grouprings::{
    ch0_group_ring, ch1_group_ring, cyclic_subgroup_classes, FiniteGroupTable,
};
use relchow::orders::{chain_length_rho, chow_group, cycle_group, k0_decomposition};
use relchow::{Derived, Rule};
use serde_json::{json, Value};

use crate::error::CliError;
use crate::input::{self, ClassGroupQuery, InputDocument, Kind};
use crate::json::{fg_group_to_json, int_to_json, matrix_to_json};

/// Subcommands that evaluate a document.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Command {
    Chow,
    Cycle,
    K0,
    Groupring,
    Classgroup,
    Snf,
    Oracle,
    Check,
}

impl Command {
    pub fn name(self) -> &'static str {
        match self {
            Command::Chow => "chow",
            Command::Cycle => "cycle",
            Command::K0 => "k0",
            Command::Groupring => "groupring",
            Command::Classgroup => "classgroup",
            Command::Snf => "snf",
            Command::Oracle => "oracle",
            Command::Check => "check",
        }
    }

    pub fn parse(name: &str) -> Option<Self> {
        [
            Command::Chow,
            Command::Cycle,
            Command::K0,
            Command::Groupring,
            Command::Classgroup,
            Command::Snf,
            Command::Oracle,
            Command::Check,
        ]
        .into_iter()
        .find(|c| c.name() == name)
    }

    fn needs_dim(self) -> bool {
        matches!(self, Command::Chow | Command::Cycle | Command::Groupring)
    }

    fn kinds(self) -> &'static [Kind] {
        match self {
            Command::Chow | Command::Cycle | Command::K0 => &[Kind::Order],
            Command::Groupring => &[Kind::Groupring],
            Command::Classgroup => &[Kind::ClassgroupQuery],
            Command::Snf => &[Kind::Matrix],
            Command::Oracle => &[Kind::Algebra],
            Command::Check => &[Kind::Bracket, Kind::Boundary],
        }
    }
}

/// What a request evaluates to.
#[derive(Clone, Debug, PartialEq)]
pub struct Outcome {
    pub result: GroupExpr,
    /// Command-specific supporting data (matrices, counts, form lists).
    pub details: Option<Value>,
    pub trace: Vec<Rule>,
    pub warnings: Vec<String>,
}

impl Outcome {
    fn from_derived(d: Derived<GroupExpr>) -> Self {
        Outcome {
            result: d.value,
            details: None,
            trace: d.trace,
            warnings: d.warnings,
        }
    }

    fn with_details(mut self, details: Value) -> Self {
        self.details = Some(details);
        self
    }
}

fn outcome(result: impl Into<GroupExpr>, trace: Vec<Rule>) -> Outcome {
    Outcome {
        result: result.into(),
        details: None,
        trace,
        warnings: Vec::new(),
    }
}

/// Evaluates `command` on a raw JSON document.
pub fn evaluate(command: Command, dim: Option<u32>, doc: &Value, guard: u64) -> Result<Outcome, CliError> {
    let doc = input::document(doc)?;
    doc.expect_kind(command.kinds(), command.name())?;
    let dim = match (command.needs_dim(), dim) {
        (true, None) => return Err(CliError::usage(format!("`{}` requires a dimension", command.name()))),
        (true, Some(d)) => d,
        (false, _) => 0,
    };
    match command {
        Command::Chow => {
            let o = input::order_spec(&doc)?;
            Ok(Outcome::from_derived(chow_group(&o, dim)?))
        }
        Command::Cycle => {
            let o = input::order_spec(&doc)?;
            Ok(Outcome::from_derived(cycle_group(&o, dim)?))
        }
        Command::K0 => {
            let o = input::order_spec(&doc)?;
            let rho = chain_length_rho(&o)?;
            Ok(Outcome::from_derived(k0_decomposition(&o)?).with_details(json!({ "rho": rho })))
        }
        Command::Groupring => group_ring(&doc, dim),
        Command::Classgroup => class_group(input::class_group_query(&doc)?),
        Command::Snf => snf(&doc),
        Command::Oracle => oracle(&doc, guard),
        Command::Check => check(&doc),
    }
}

fn group_ring(doc: &InputDocument, dim: u32) -> Result<Outcome, CliError> {
    let spec = input::group_ring_spec(doc)?;
    let out = match dim {
        0 => Outcome::from_derived(ch0_group_ring(&spec)?),
        1 => Outcome::from_derived(ch1_group_ring(&spec)),
        _ => outcome(GroupExpr::trivial(), vec![Rule::VanishingAboveDimension]),
    };
    Ok(out.with_details(json!({
        "base": spec.base.label(),
        "cyclic_subgroup_classes": cyclic_subgroup_classes(&spec.group),
        "group_order": spec.group.order(),
    })))
}

fn class_group(q: ClassGroupQuery) -> Result<Outcome, CliError> {
    match q {
        ClassGroupQuery::Discriminant(d) => {
            let table = FormClassTable::new(d)?;
            let forms: Vec<Value> = table.forms.iter().map(|f| json!([f.a, f.b, f.c])).collect();
            Ok(outcome(table.group(), vec![Rule::QuadraticForms]).with_details(json!({
                "class_number": table.class_number(),
                "discriminant": d,
                "reduced_forms": forms,
            })))
        }
        ClassGroupQuery::Cyclotomic(p) => {
            let g = cyclotomic_class_group(p)?;
            let mut out = outcome(g, vec![Rule::CyclotomicTable]);
            if !out.result.is_resolved() {
                out.warnings
                    .push(format!("p = {p} lies outside the shipped table; the class group is left symbolic"));
            }
            Ok(out.with_details(json!({ "prime": p })))
        }
    }
}

fn snf(doc: &InputDocument) -> Result<Outcome, CliError> {
    let m = input::matrix(doc)?;
    let f = smith_normal_form(&m);
    let presented = cokernel_of(&m)?;
    Ok(outcome(presented, vec![Rule::SmithNormalForm]).with_details(json!({
        "diagonal": f.diagonal().iter().map(int_to_json).collect::<Vec<_>>(),
        "rank": f.rank(),
        "s": matrix_to_json(&f.s),
        "u": matrix_to_json(&f.u),
        "v": matrix_to_json(&f.v),
    })))
}

/// The group presented by `m`: generators are rows, relations are columns.
fn cokernel_of(m: &relchow::abgroup::IntMatrix) -> Result<FgAbGroup, CliError> {
    Ok(Presentation::new(m.rows(), m.clone())?.group())
}

fn oracle(doc: &InputDocument, guard: u64) -> Result<Outcome, CliError> {
    let input::AlgebraInput { algebra, proxy_for } = input::algebra(doc)?;
    let j = jacobson_radical(&algebra, guard)?;
    let simples = count_simples(&algebra, guard)?;
    let k0 = k0_finite_length(&algebra, guard)?;
    let mut out = outcome(k0, vec![Rule::RadicalScan, Rule::Devissage]).with_details(json!({
        "characteristic": algebra.characteristic(),
        "dimension": algebra.dim(),
        "nilpotency_index": nilpotency_index(&algebra, &j),
        "radical_basis": j.basis(),
        "radical_dimension": j.dim(),
        "simple_modules": simples,
    }));
    if let Some(target) = proxy_for {
        out.warnings.push(format!(
            "proxy check: {target} is validated through this finite-dimensional quotient, not the order itself"
        ));
    }
    Ok(out)
}

/// `ℤ^t` with `t` the number of rational Wedderburn factors of `Q[Cyc_n]`.
pub fn wedderburn(n: u64) -> Result<Outcome, CliError> {
    const MAX_ORDER: u64 = 5000;
    if !(1..=MAX_ORDER).contains(&n) {
        return Err(CliError::usage(format!("--wedderburn expects 1 <= n <= {MAX_ORDER}")));
    }
    let factors = cyclic_wedderburn_oracle(n);
    let classes = cyclic_subgroup_classes(&FiniteGroupTable::cyclic(n as usize));
    let mut out = outcome(GroupExpr::free(factors as usize), vec![Rule::CyclicSubgroupCount])
        .with_details(json!({
            "cyclic_subgroup_classes": classes,
            "n": n,
            "wedderburn_factors": factors,
        }));
    if classes as u64 != factors {
        out.warnings
            .push(format!("divisor count {factors} disagrees with cyclic subgroup classes {classes}"));
    }
    Ok(out)
}

fn check(doc: &InputDocument) -> Result<Outcome, CliError> {
    if doc.kind == Kind::Boundary {
        let b = input::boundary(doc)?;
        let d = &b.k1_boundary;
        return Ok(outcome(chow_from_cokernel(&b), vec![Rule::LocalizationCokernel, Rule::SmithNormalForm])
            .with_details(json!({
                "boundary_zero": d.is_zero(),
                "k0_bottom": fg_group_to_json(&d.codomain().group()),
            })));
    }
    let b = input::bracket(doc)?;
    let chow = chow_from_bracket(&b, true)?;
    let s = check_split_surjective(&b);
    let mut trace = vec![Rule::LocalizationImage, Rule::SmithNormalForm];
    if s.surjective {
        trace.push(Rule::SurjectivityIdempotentComplete);
    }
    let mut out = outcome(chow, trace).with_details(json!({
        "exact": true,
        "flag_agrees": s.flag_agrees,
        "image_of_pi": fg_group_to_json(&relchow::abgroup::image(b.pi())),
        "pi_surjective": s.surjective,
        "cokernel_of_pi": fg_group_to_json(&cokernel(b.pi())),
    }));
    out.warnings.extend(s.warning());
    Ok(out)
}
