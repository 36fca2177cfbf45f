//! Reading forms, points and tuples from command-line text.

use std::sync::Arc;

use bforms::{parse_poly, BinaryForm, Error, Poly, PointTuple, ProjPoint, ProjectiveRing, Ring, VarTable};

use crate::error::CliError;

/// How form text is read: univariate in `Z`, or homogeneous in `X`, `Y`.
#[derive(Clone, Debug, Default)]
pub struct FormSyntax {
    pub homog: bool,
    pub symbolic: bool,
    /// Coefficient variables in the order given by `--vars`.
    pub vars: Option<Vec<String>>,
}

impl FormSyntax {
    fn form_vars(&self) -> &'static [&'static str] {
        if self.homog {
            &["X", "Y"]
        } else {
            &["Z"]
        }
    }
}

/// Forms read over a shared table of coefficient variables.
pub struct Forms<R: Ring> {
    pub coefficients: Arc<VarTable>,
    pub forms: Vec<BinaryForm<Poly<R>>>,
}

impl<R: Ring> Forms<R> {
    pub fn is_symbolic(&self) -> bool {
        !self.coefficients.is_empty()
    }

    /// Numeric coefficients; only valid when no coefficient variables exist.
    pub fn constants(&self) -> Vec<BinaryForm<R::Elem>> {
        self.forms.iter().map(|f| f.to_constants().expect("no coefficient variables")).collect()
    }
}

pub fn read_forms<R: Ring>(
    ring: &R,
    texts: &[&str],
    degrees: &[Option<usize>],
    syntax: &FormSyntax,
) -> Result<Forms<R>, CliError> {
    let form_vars = syntax.form_vars();
    let coeff_names: Vec<String> = match &syntax.vars {
        Some(v) => v.clone(),
        None => {
            let mut names = Vec::new();
            for t in texts {
                for id in bforms::parser::identifiers(t).map_err(|e| CliError::Usage(format!("{e} in `{t}`")))? {
                    if !form_vars.contains(&id.as_str()) && !names.contains(&id) {
                        names.push(id);
                    }
                }
            }
            names
        }
    };
    if let Some(clash) = coeff_names.iter().find(|n| form_vars.contains(&n.as_str())) {
        return Err(CliError::Usage(format!("`{clash}` is the form variable and cannot be a coefficient")));
    }
    if !coeff_names.is_empty() && !syntax.symbolic {
        return Err(CliError::Usage(format!(
            "coefficient variables {} need --symbolic",
            coeff_names.join(", ")
        )));
    }
    let full = VarTable::new(coeff_names.iter().map(String::as_str).chain(form_vars.iter().copied()))
        .map_err(CliError::from)?
        .into_shared();
    let coefficients = VarTable::new(&coeff_names).map_err(CliError::from)?.into_shared();

    let mut forms = Vec::with_capacity(texts.len());
    for (text, degree) in texts.iter().zip(degrees) {
        let p = parse_poly(ring, &full, text).map_err(|e| CliError::Usage(format!("{e} in `{text}`")))?;
        let form = if syntax.homog {
            BinaryForm::from_homogeneous(&p, "X", "Y", *degree)
        } else {
            BinaryForm::from_univariate(&p, "Z", *degree)
        }
        .map_err(CliError::from)?;
        let coeffs = form.coeffs().iter().map(|c| c.embed(&coefficients)).collect::<Result<Vec<_>, _>>()?;
        forms.push(BinaryForm::new(coeffs)?);
    }
    Ok(Forms { coefficients, forms })
}

/// One coordinate, written in the polynomial text format without variables.
fn coordinate<R: Ring>(ring: &R, text: &str) -> Result<R::Elem, CliError> {
    let empty = VarTable::new(Vec::<String>::new()).expect("empty table").into_shared();
    parse_poly(ring, &empty, text)
        .map_err(|e| CliError::Usage(format!("{e} in coordinate `{text}`")))?
        .as_constant()
        .ok_or_else(|| CliError::Usage(format!("coordinate `{text}` is not a constant")))
}

/// A projective point written `a:b:...`.
pub fn read_point<R: ProjectiveRing>(ring: &R, text: &str) -> Result<ProjPoint<R::Elem>, CliError> {
    let coords = text.split(':').map(|c| coordinate(ring, c.trim())).collect::<Result<Vec<_>, _>>()?;
    if coords.len() < 2 {
        return Err(CliError::Usage(format!("point `{text}` needs at least two coordinates")));
    }
    ProjPoint::new(ring, coords).map_err(|e| match e {
        Error::ZeroPoint => CliError::Usage(format!("point `{text}` is zero")),
        other => other.into(),
    })
}

/// A tuple of points of `P^1` written `a:b, c:d, ...`.
pub fn read_tuple<R: ProjectiveRing>(ring: &R, text: &str) -> Result<PointTuple<R::Elem>, CliError> {
    let points = text.split([',', ';']).map(|p| read_point(ring, p.trim())).collect::<Result<Vec<_>, _>>()?;
    if let Some(p) = points.iter().find(|p| p.dim() != 1) {
        return Err(CliError::Usage(format!("tuple entries must have two coordinates, got {}", p.dim() + 1)));
    }
    Ok(PointTuple::new(points)?)
}
