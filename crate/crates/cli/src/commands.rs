use bforms::identities::{verify_ind, verify_inv, verify_resdisc, verify_resth};
use bforms::resultant::{form_table, generic_form};
use bforms::symprod::x_table;
use bforms::{
    discriminant, ehsp, express_in_ehsp, member_dn, member_rnm, member_xn, member_xnm, parse_poly, resultant,
    scan_disc_quotient, scan_quotient, scan_resultant_equiv, sylvester_matrix, viete, Integers, Poly,
    PolyRing, ProjectiveRing, Ring,
};
use serde_json::{json, Value};

use crate::error::CliError;
use crate::input::{read_forms, read_point, read_tuple, FormSyntax};

/// Result of a command: text for plain output, a document for `--json`,
/// and whether the answer counts as a negative outcome (exit code 1).
pub struct Output {
    pub text: String,
    pub json: Value,
    pub negative: bool,
}

impl Output {
    fn new(text: String, json: Value) -> Self {
        Output { text, json, negative: false }
    }
}

pub fn res<R: Ring>(ring: &R, f: &str, g: &str, degrees: [Option<usize>; 2], syntax: &FormSyntax) -> Result<Output, CliError> {
    let forms = read_forms(ring, &[f, g], &degrees, syntax)?;
    let text = if forms.is_symbolic() {
        let pr = PolyRing::new(ring.clone(), forms.coefficients.clone());
        resultant(&pr, &forms.forms[0], &forms.forms[1])?.to_string()
    } else {
        let c = forms.constants();
        ring.display(&resultant(ring, &c[0], &c[1])?).to_string()
    };
    Ok(Output::new(text.clone(), json!({ "resultant": text })))
}

pub fn disc<R: Ring>(ring: &R, form: Option<&str>, degree: Option<usize>, syntax: &FormSyntax) -> Result<Output, CliError> {
    let text = match form {
        Some(form) => {
            let forms = read_forms(ring, &[form], &[degree], syntax)?;
            if forms.is_symbolic() {
                let pr = PolyRing::new(ring.clone(), forms.coefficients.clone());
                discriminant(&pr, &forms.forms[0])?.to_string()
            } else {
                ring.display(&discriminant(ring, &forms.constants()[0])?).to_string()
            }
        }
        None => {
            if !syntax.symbolic {
                return Err(CliError::Usage("give --form, or --symbolic with --n".into()));
            }
            let n = degree.ok_or_else(|| CliError::Usage("--symbolic without --form needs --n".into()))?;
            let table = form_table("p", n);
            let pr = PolyRing::new(ring.clone(), table.clone());
            discriminant(&pr, &generic_form(ring, &table, "p", n)?)?.to_string()
        }
    };
    Ok(Output::new(text.clone(), json!({ "discriminant": text })))
}

pub fn sylvester<R: Ring>(ring: &R, f: &str, g: &str, degrees: [Option<usize>; 2], syntax: &FormSyntax) -> Result<Output, CliError> {
    let forms = read_forms(ring, &[f, g], &degrees, syntax)?;
    let rows: Vec<Vec<String>> = if forms.is_symbolic() {
        let pr = PolyRing::new(ring.clone(), forms.coefficients.clone());
        let m = sylvester_matrix(&pr, &forms.forms[0], &forms.forms[1])?;
        m.to_rows().iter().map(|r| r.iter().map(Poly::to_string).collect()).collect()
    } else {
        let c = forms.constants();
        let m = sylvester_matrix(ring, &c[0], &c[1])?;
        m.to_rows().iter().map(|r| r.iter().map(|e| ring.display(e).to_string()).collect()).collect()
    };
    let text = rows.iter().map(|r| format!("[{}]", r.join(", "))).collect::<Vec<_>>().join("\n");
    Ok(Output::new(text, json!({ "rows": rows })))
}

pub fn ehsp_cmd(n: usize) -> Result<Output, CliError> {
    let ps: Vec<String> = ehsp(&Integers, n)?.iter().map(Poly::to_string).collect();
    let text = ps.iter().enumerate().map(|(k, p)| format!("p{k} = {p}")).collect::<Vec<_>>().join("\n");
    Ok(Output::new(text, json!({ "n": n, "p": ps })))
}

pub fn viete_cmd<R: ProjectiveRing>(ring: &R, points: &str) -> Result<Output, CliError> {
    let tuple = read_tuple(ring, points)?;
    let image = viete(ring, &tuple);
    let coords: Vec<String> = image.coords().iter().map(|c| ring.display(c).to_string()).collect();
    let text = format!("({})", coords.join(":"));
    Ok(Output::new(text, json!({ "point": coords })))
}

pub fn express<R: Ring>(ring: &R, poly: &str, n: usize) -> Result<Output, CliError> {
    let p = parse_poly(ring, &x_table(n), poly).map_err(|e| CliError::Usage(format!("{e} in `{poly}`")))?;
    let q = express_in_ehsp(&p, n)?;
    let text = q.to_string();
    Ok(Output::new(text.clone(), json!({ "n": n, "expression": text })))
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, clap::ValueEnum)]
pub enum Locus {
    /// Pullback of the resultant locus: --x and --y are tuples of points of P^1.
    Xnm,
    /// Pullback of the discriminant locus: --x is a tuple of points of P^1.
    Xn,
    /// Resultant locus: --x and --y are coefficient points.
    Rnm,
    /// Discriminant locus: --x is a coefficient point.
    Dn,
}

pub fn member<R: ProjectiveRing>(ring: &R, locus: Locus, x: &str, y: Option<&str>) -> Result<Output, CliError> {
    let need_y = || y.ok_or_else(|| CliError::Usage(format!("locus {locus:?} needs --y")));
    let answer = match locus {
        Locus::Xnm => member_xnm(ring, &read_tuple(ring, x)?, &read_tuple(ring, need_y()?)?),
        Locus::Xn => member_xn(ring, &read_tuple(ring, x)?),
        Locus::Rnm => member_rnm(ring, &read_point(ring, x)?, &read_point(ring, need_y()?)?)?,
        Locus::Dn => member_dn(ring, &read_point(ring, x)?)?,
    };
    let name = format!("{locus:?}").to_lowercase();
    Ok(Output { text: answer.to_string(), json: json!({ "locus": name, "member": answer }), negative: !answer })
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, clap::ValueEnum)]
pub enum Check {
    /// Sylvester resultant against the product formula.
    Resth,
    /// Resultant of a form and its derivative against the discriminant.
    Resdisc,
    /// Algebraic independence of the generators.
    Ind,
    /// Symmetry of the generators and expression round trips.
    Inv,
}

pub fn verify(check: Check, n: usize, m: Option<usize>) -> Result<Output, CliError> {
    let detail = match check {
        Check::Resth => verify_resth(n, m.unwrap_or(n)),
        Check::Resdisc => verify_resdisc(n),
        Check::Ind => verify_ind(n),
        Check::Inv => verify_inv(n),
    }?;
    let name = format!("{check:?}").to_lowercase();
    Ok(Output::new("OK".into(), json!({ "check": name, "ok": true, "detail": detail })))
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, clap::ValueEnum)]
pub enum ScanKind {
    /// Resultant vanishing against a common factor.
    Res,
    /// Viete product map onto the resultant locus.
    Quotient,
    /// Viete map onto the discriminant locus.
    Disc,
}

pub fn scan(kind: ScanKind, q: u32, n: usize, m: Option<usize>) -> Result<Output, CliError> {
    let report = match kind {
        ScanKind::Res => scan_resultant_equiv(q, n, m.unwrap_or(n)),
        ScanKind::Quotient => scan_quotient(q, n, m.unwrap_or(n)),
        ScanKind::Disc => scan_disc_quotient(q, n),
    }?;
    let json = serde_json::to_value(&report).expect("report serializes");
    Ok(Output { text: report.to_json(), json, negative: !report.passed() })
}
