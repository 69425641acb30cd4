//! The line-oriented setting format.
//!
//! ```text
//! supermixed
//! vertex v dim 2 dual w
//! vertex w dim 2 dual v
//! vertex x dim 2 dual x eps -1
//! arrow a : v -> w dual a sigma -1
//! factor general mult 1 dims v=1 w=1
//! ```

use std::collections::HashMap;
use std::fmt::Write as _;

use supermixed::local::{FactorKind, SemisimpleDecomposition, SimpleFactor};
use supermixed::setting::{validate, RawSetting};
use supermixed::{Arrow, DimensionVector, Quiver, Sign, Subject, SupermixedSetting};
use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ParseError {
    #[error("line {line}, column {column}: {message}")]
    Syntax {
        line: usize,
        column: usize,
        message: String,
    },
    #[error("line {line}: [{rule}] {message}")]
    Semantic {
        line: usize,
        rule: String,
        message: String,
    },
    #[error("{}", .0.iter().map(ToString::to_string).collect::<Vec<_>>().join("\n"))]
    Invalid(Vec<ParseError>),
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct VertexDecl {
    pub name: String,
    pub dim: u32,
    pub dual: String,
    pub eps: Sign,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ArrowDecl {
    pub name: String,
    pub tail: String,
    pub head: String,
    pub dual: String,
    pub sigma: Sign,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FactorDecl {
    pub kind: FactorKind,
    pub mult: u32,
    pub dims: Vec<(String, u32)>,
}

/// A parsed setting with names, plus an optional decomposition block.
///
/// Equality ignores source lines.
#[derive(Debug, Clone, Default)]
pub struct SettingDocument {
    pub vertices: Vec<VertexDecl>,
    pub arrows: Vec<ArrowDecl>,
    pub factors: Vec<FactorDecl>,
    vertex_lines: Vec<usize>,
    arrow_lines: Vec<usize>,
    factor_lines: Vec<usize>,
}

impl PartialEq for SettingDocument {
    fn eq(&self, other: &Self) -> bool {
        self.vertices == other.vertices && self.arrows == other.arrows && self.factors == other.factors
    }
}

impl Eq for SettingDocument {}

struct Token<'a> {
    text: &'a str,
    column: usize,
}

fn tokenize(line: &str) -> Vec<Token<'_>> {
    let line = line.split('#').next().unwrap_or("");
    let mut out = Vec::new();
    let mut start = None;
    for (col, (i, c)) in line.char_indices().enumerate() {
        match (c.is_whitespace(), start) {
            (false, None) => start = Some((i, col + 1)),
            (true, Some((s, column))) => {
                out.push(Token { text: &line[s..i], column });
                start = None;
            }
            _ => {}
        }
    }
    if let Some((s, column)) = start {
        out.push(Token { text: &line[s..], column });
    }
    out
}

struct LineParser<'a> {
    line: usize,
    tokens: Vec<Token<'a>>,
    pos: usize,
    end_column: usize,
}

impl<'a> LineParser<'a> {
    fn error(&self, message: impl Into<String>) -> ParseError {
        let column = self
            .tokens
            .get(self.pos)
            .map_or(self.end_column, |t| t.column);
        ParseError::Syntax {
            line: self.line,
            column,
            message: message.into(),
        }
    }

    fn next(&mut self, what: &str) -> Result<&'a str, ParseError> {
        let t = self
            .tokens
            .get(self.pos)
            .ok_or_else(|| self.error(format!("expected {what}")))?;
        self.pos += 1;
        Ok(t.text)
    }

    fn keyword(&mut self, kw: &str) -> Result<(), ParseError> {
        match self.tokens.get(self.pos) {
            Some(t) if t.text == kw => {
                self.pos += 1;
                Ok(())
            }
            Some(t) => Err(self.error(format!("expected '{kw}', found '{}'", t.text))),
            None => Err(self.error(format!("expected '{kw}'"))),
        }
    }

    fn name(&mut self, what: &str) -> Result<String, ParseError> {
        let t = self.next(what)?;
        let ok = t
            .chars()
            .all(|c| c.is_alphanumeric() || c == '_' || c == '\'' || c == '*');
        if !ok || t == "->" || t == ":" {
            self.pos -= 1;
            return Err(self.error(format!("invalid {what} '{t}'")));
        }
        Ok(t.to_string())
    }

    fn number(&mut self, what: &str) -> Result<u32, ParseError> {
        let t = self.next(what)?;
        t.parse().map_err(|_| {
            self.pos -= 1;
            self.error(format!("expected {what}, found '{t}'"))
        })
    }

    fn sign(&mut self) -> Result<Sign, ParseError> {
        match self.next("sign")? {
            "+1" | "1" => Ok(Sign::Plus),
            "-1" => Ok(Sign::Minus),
            other => {
                self.pos -= 1;
                Err(self.error(format!("expected +1 or -1, found '{other}'")))
            }
        }
    }

    fn optional_sign(&mut self, kw: &str) -> Result<Sign, ParseError> {
        if self.pos < self.tokens.len() {
            self.keyword(kw)?;
            self.sign()
        } else {
            Ok(Sign::Plus)
        }
    }

    fn finish(&self) -> Result<(), ParseError> {
        match self.tokens.get(self.pos) {
            Some(t) => Err(self.error(format!("unexpected '{}'", t.text))),
            None => Ok(()),
        }
    }
}

fn semantic(line: usize, rule: &str, message: impl Into<String>) -> ParseError {
    ParseError::Semantic {
        line,
        rule: rule.to_string(),
        message: message.into(),
    }
}

fn factor_kind(p: &mut LineParser<'_>) -> Result<FactorKind, ParseError> {
    match p.next("factor kind")? {
        "orthogonal" => Ok(FactorKind::Orthogonal),
        "symplectic" => Ok(FactorKind::Symplectic),
        "general" => Ok(FactorKind::General),
        other => {
            p.pos -= 1;
            Err(p.error(format!("unknown factor kind '{other}'")))
        }
    }
}

/// Parse and check a document: grammar, names, duals, and M1 to M3.
pub fn parse(text: &str) -> Result<SettingDocument, ParseError> {
    let mut doc = SettingDocument::default();
    let mut header = false;
    for (i, raw) in text.lines().enumerate() {
        let tokens = tokenize(raw);
        if tokens.is_empty() {
            continue;
        }
        let mut p = LineParser {
            line: i + 1,
            tokens,
            pos: 0,
            end_column: raw.split('#').next().unwrap_or("").chars().count() + 1,
        };
        if !header {
            p.keyword("supermixed")?;
            p.finish()?;
            header = true;
            continue;
        }
        match p.next("declaration")? {
            "vertex" => {
                let name = p.name("vertex name")?;
                p.keyword("dim")?;
                let dim = p.number("dimension")?;
                p.keyword("dual")?;
                let dual = p.name("vertex name")?;
                let eps = p.optional_sign("eps")?;
                p.finish()?;
                doc.vertices.push(VertexDecl { name, dim, dual, eps });
                doc.vertex_lines.push(p.line);
            }
            "arrow" => {
                let name = p.name("arrow name")?;
                p.keyword(":")?;
                let tail = p.name("vertex name")?;
                p.keyword("->")?;
                let head = p.name("vertex name")?;
                p.keyword("dual")?;
                let dual = p.name("arrow name")?;
                let sigma = p.optional_sign("sigma")?;
                p.finish()?;
                doc.arrows.push(ArrowDecl { name, tail, head, dual, sigma });
                doc.arrow_lines.push(p.line);
            }
            "factor" => {
                let kind = factor_kind(&mut p)?;
                p.keyword("mult")?;
                let mult = p.number("multiplicity")?;
                p.keyword("dims")?;
                let mut dims = Vec::new();
                while p.pos < p.tokens.len() {
                    let t = p.next("v=n")?;
                    let parsed = t
                        .split_once('=')
                        .and_then(|(v, n)| Some((v.to_string(), n.parse::<u32>().ok()?)));
                    match parsed {
                        Some(x) if !x.0.is_empty() => dims.push(x),
                        _ => {
                            p.pos -= 1;
                            return Err(p.error(format!("expected <vertex>=<n>, found '{t}'")));
                        }
                    }
                }
                doc.factors.push(FactorDecl { kind, mult, dims });
                doc.factor_lines.push(p.line);
            }
            other => {
                p.pos -= 1;
                return Err(p.error(format!("unknown declaration '{other}'")));
            }
        }
    }
    if !header {
        return Err(ParseError::Syntax {
            line: 1,
            column: 1,
            message: "missing 'supermixed' header".into(),
        });
    }
    doc.check()?;
    Ok(doc)
}

impl SettingDocument {
    fn vertex_index(&self) -> HashMap<&str, usize> {
        self.vertices.iter().enumerate().map(|(i, v)| (v.name.as_str(), i)).collect()
    }

    fn arrow_index(&self) -> HashMap<&str, usize> {
        self.arrows.iter().enumerate().map(|(i, a)| (a.name.as_str(), i)).collect()
    }

    fn vertex_line(&self, v: usize) -> usize {
        self.vertex_lines.get(v).copied().unwrap_or(0)
    }

    fn arrow_line(&self, a: usize) -> usize {
        self.arrow_lines.get(a).copied().unwrap_or(0)
    }

    fn check(&self) -> Result<(), ParseError> {
        let mut errors = Vec::new();
        let vidx = self.vertex_index();
        let aidx = self.arrow_index();
        if vidx.len() != self.vertices.len() || aidx.len() != self.arrows.len() {
            let mut seen = HashMap::new();
            for (i, v) in self.vertices.iter().enumerate() {
                if seen.insert(v.name.as_str(), i).is_some() {
                    errors.push(semantic(self.vertex_line(i), "names", format!("duplicate vertex '{}'", v.name)));
                }
            }
            let mut seen = HashMap::new();
            for (i, a) in self.arrows.iter().enumerate() {
                if seen.insert(a.name.as_str(), i).is_some() {
                    errors.push(semantic(self.arrow_line(i), "names", format!("duplicate arrow '{}'", a.name)));
                }
            }
            return Err(ParseError::Invalid(errors));
        }
        for (i, v) in self.vertices.iter().enumerate() {
            let line = self.vertex_line(i);
            match vidx.get(v.dual.as_str()) {
                None => errors.push(semantic(line, "dual", format!("unresolved dual vertex '{}'", v.dual))),
                Some(&d) if self.vertices[d].dual != v.name => errors.push(semantic(
                    line,
                    "dual",
                    format!("dual of '{}' is '{}', but dual of '{}' is '{}'", v.name, v.dual, v.dual, self.vertices[d].dual),
                )),
                Some(&d) if d != i && v.eps == Sign::Minus => errors.push(semantic(
                    line,
                    "strictness",
                    format!("eps -1 on vertex '{}' which is not self-dual", v.name),
                )),
                _ => {}
            }
        }
        for (i, a) in self.arrows.iter().enumerate() {
            let line = self.arrow_line(i);
            for end in [&a.tail, &a.head] {
                if !vidx.contains_key(end.as_str()) {
                    errors.push(semantic(line, "names", format!("unknown vertex '{end}' in arrow '{}'", a.name)));
                }
            }
            match aidx.get(a.dual.as_str()) {
                None => errors.push(semantic(line, "dual", format!("unresolved dual arrow '{}'", a.dual))),
                Some(&d) if self.arrows[d].dual != a.name => errors.push(semantic(
                    line,
                    "dual",
                    format!("dual of '{}' is '{}', but dual of '{}' is '{}'", a.name, a.dual, a.dual, self.arrows[d].dual),
                )),
                Some(&d) if d != i && a.sigma == Sign::Minus => errors.push(semantic(
                    line,
                    "strictness",
                    format!("sigma -1 on arrow '{}' which is not self-dual", a.name),
                )),
                _ => {}
            }
        }
        for (i, f) in self.factors.iter().enumerate() {
            for (v, _) in &f.dims {
                if !vidx.contains_key(v.as_str()) {
                    errors.push(semantic(self.factor_lines[i], "names", format!("unknown vertex '{v}' in factor")));
                }
            }
        }
        if !errors.is_empty() {
            return Err(ParseError::Invalid(errors));
        }
        let raw = self.raw();
        let violations = validate(&raw);
        if violations.is_empty() {
            return Ok(());
        }
        Err(ParseError::Invalid(
            violations
                .into_iter()
                .map(|v| {
                    let (line, what) = match v.subject {
                        Subject::Vertex(i) => (self.vertex_line(i), format!("vertex '{}'", self.vertices[i].name)),
                        Subject::Arrow(i) => (self.arrow_line(i), format!("arrow '{}'", self.arrows[i].name)),
                        Subject::Setting => (0, "setting".to_string()),
                    };
                    semantic(line, v.rule, format!("{what}: {}", v.message))
                })
                .collect(),
        ))
    }

    /// Names resolved to indices; only meaningful after [`SettingDocument::check`].
    fn raw(&self) -> RawSetting {
        let vidx = self.vertex_index();
        let aidx = self.arrow_index();
        let arrows = self
            .arrows
            .iter()
            .map(|a| Arrow::new(vidx[a.tail.as_str()], vidx[a.head.as_str()]))
            .collect();
        RawSetting {
            quiver: Quiver::new(self.vertices.len(), arrows).expect("endpoints resolved"),
            phi_v: self.vertices.iter().map(|v| vidx[v.dual.as_str()]).collect(),
            phi_a: self.arrows.iter().map(|a| aidx[a.dual.as_str()]).collect(),
            eps: self.vertices.iter().map(|v| v.eps).collect(),
            sigma: self.arrows.iter().map(|a| a.sigma).collect(),
            gamma_bar: DimensionVector(self.vertices.iter().map(|v| v.dim).collect()),
            gamma: None,
        }
    }

    /// The strict setting, vertices and arrows in declaration order.
    pub fn setting(&self) -> Result<SupermixedSetting, supermixed::Error> {
        supermixed::setting::normalize_to_strict(&self.raw())
    }

    /// The decomposition block; vertices not listed in a factor get 0.
    pub fn decomposition(&self) -> SemisimpleDecomposition {
        let vidx = self.vertex_index();
        let factors = self
            .factors
            .iter()
            .map(|f| {
                let mut alpha = vec![0; self.vertices.len()];
                for (v, n) in &f.dims {
                    alpha[vidx[v.as_str()]] = *n;
                }
                SimpleFactor::new(f.kind, DimensionVector(alpha), f.mult)
            })
            .collect();
        SemisimpleDecomposition::new(factors)
    }

    /// Document for a strict setting with the given names.
    pub fn from_setting(s: &SupermixedSetting, vertex_names: &[String], arrow_names: &[String]) -> Self {
        let smq = s.smq();
        let vertices = (0..s.vertex_count())
            .map(|v| VertexDecl {
                name: vertex_names[v].clone(),
                dim: s.dim(v),
                dual: vertex_names[smq.phi_v(v)].clone(),
                eps: smq.eps(v),
            })
            .collect();
        let arrows = (0..s.arrow_count())
            .map(|a| ArrowDecl {
                name: arrow_names[a].clone(),
                tail: vertex_names[smq.tail(a)].clone(),
                head: vertex_names[smq.head(a)].clone(),
                dual: arrow_names[smq.phi_a(a)].clone(),
                sigma: smq.sigma(a),
            })
            .collect();
        SettingDocument {
            vertices,
            arrows,
            ..Default::default()
        }
    }

    /// Canonical text: defaults omitted, declaration order kept.
    pub fn print(&self) -> String {
        let mut out = String::from("supermixed\n");
        for v in &self.vertices {
            let _ = write!(out, "vertex {} dim {} dual {}", v.name, v.dim, v.dual);
            if v.eps == Sign::Minus {
                out.push_str(" eps -1");
            }
            out.push('\n');
        }
        for a in &self.arrows {
            let _ = write!(out, "arrow {} : {} -> {} dual {}", a.name, a.tail, a.head, a.dual);
            if a.sigma == Sign::Minus {
                out.push_str(" sigma -1");
            }
            out.push('\n');
        }
        for f in &self.factors {
            let _ = write!(out, "factor {} mult {} dims", f.kind.to_string().to_lowercase(), f.mult);
            for (v, n) in &f.dims {
                let _ = write!(out, " {v}={n}");
            }
            out.push('\n');
        }
        out
    }
}
