//! JSON documents for presentations.
//!
//! Paths are arrays of 1-generator names. An empty path needs an `object`
//! field unless its start can be read off a sibling path. Terms list their
//! layers with explicit left and right whiskers.

use serde::{Deserialize, Serialize};

use super::{Computad, Layer, Oracle, Path, Presentation, PresentationError, Shape, Term};

#[derive(Debug, Clone, Serialize, Deserialize, PartialEq, Eq)]
#[serde(deny_unknown_fields)]
pub struct PresentationDoc {
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub name: Option<String>,
    pub objects: Vec<String>,
    pub one_generators: Vec<OneGenDoc>,
    pub two_generators: Vec<TwoGenDoc>,
    #[serde(default)]
    pub one_rules: Vec<RuleDoc>,
    #[serde(default)]
    pub two_relations: Vec<RelationDoc>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub oracle: Option<String>,
}

#[derive(Debug, Clone, Serialize, Deserialize, PartialEq, Eq)]
#[serde(deny_unknown_fields)]
pub struct OneGenDoc {
    pub name: String,
    pub src: String,
    pub tgt: String,
}

#[derive(Debug, Clone, Serialize, Deserialize, PartialEq, Eq)]
#[serde(deny_unknown_fields)]
pub struct TwoGenDoc {
    pub name: String,
    pub src_path: Vec<String>,
    pub tgt_path: Vec<String>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub object: Option<String>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub shape: Option<String>,
}

#[derive(Debug, Clone, Serialize, Deserialize, PartialEq, Eq)]
#[serde(deny_unknown_fields)]
pub struct RuleDoc {
    pub lhs: Vec<String>,
    pub rhs: Vec<String>,
}

#[derive(Debug, Clone, Serialize, Deserialize, PartialEq, Eq)]
#[serde(deny_unknown_fields)]
pub struct RelationDoc {
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub name: Option<String>,
    pub lhs: TermDoc,
    pub rhs: TermDoc,
}

#[derive(Debug, Clone, Serialize, Deserialize, PartialEq, Eq)]
#[serde(deny_unknown_fields)]
pub struct TermDoc {
    pub src_path: Vec<String>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub object: Option<String>,
    pub layers: Vec<LayerDoc>,
}

#[derive(Debug, Clone, Serialize, Deserialize, PartialEq, Eq)]
#[serde(deny_unknown_fields)]
pub struct LayerDoc {
    pub left: Vec<String>,
    pub gen: String,
    pub right: Vec<String>,
}

fn err(msg: impl Into<String>) -> PresentationError {
    PresentationError::Other(msg.into())
}

fn names(c: &Computad, p: &Path) -> Vec<String> {
    p.edges.iter().map(|&e| c.one[e].name.clone()).collect()
}

fn resolve_path(c: &Computad, edges: &[String], object: Option<usize>) -> Result<Path, PresentationError> {
    let start = match edges.first() {
        Some(e) => c.one[c.one_gen(e)?].src,
        None => object.ok_or_else(|| err("empty path needs an `object` field"))?,
    };
    let edges = edges.iter().map(|e| c.one_gen(e)).collect::<Result<Vec<_>, _>>()?;
    let p = Path { start, edges };
    c.check_path(&p)?;
    Ok(p)
}

fn object_field(c: &Computad, o: &Option<String>) -> Result<Option<usize>, PresentationError> {
    o.as_deref().map(|o| c.object(o)).transpose()
}

/// Reads a term document; `hint` supplies the start object of an empty
/// source path when the document has none.
pub fn term_from_doc(c: &Computad, d: &TermDoc, hint: Option<usize>) -> Result<Term, PresentationError> {
    let mut object = object_field(c, &d.object)?.or(hint);
    if object.is_none() && d.src_path.is_empty() {
        object = d.layers.first().and_then(|l| {
            let g = c.two_gen(&l.gen).ok()?;
            match l.left.first() {
                Some(e) => c.one_gen(e).ok().map(|e| c.one[e].src),
                None => Some(c.two[g].src.start),
            }
        });
    }
    let src = resolve_path(c, &d.src_path, object)?;
    let mut cur = src.clone();
    let mut layers = Vec::with_capacity(d.layers.len());
    for (index, l) in d.layers.iter().enumerate() {
        let gen = c.two_gen(&l.gen)?;
        let layer = Layer { offset: l.left.len(), gen };
        let next = c.apply_layer(&cur, &layer).map_err(|reason| PresentationError::IllTyped { index, reason })?;
        let n = c.two[gen].src.len();
        let left = names(c, &c.slice(&cur, 0, layer.offset));
        let right = names(c, &c.slice(&cur, layer.offset + n, cur.len()));
        if left != l.left || right != l.right {
            return Err(PresentationError::IllTyped { index, reason: "whiskers do not match the current path".into() });
        }
        layers.push(layer);
        cur = next;
    }
    Ok(Term { src, tgt: cur, layers })
}

pub fn term_to_doc(c: &Computad, t: &Term) -> TermDoc {
    let slices = c.slices(t).expect("well-typed term");
    let layers = t
        .layers
        .iter()
        .enumerate()
        .map(|(i, l)| {
            let p = &slices[i];
            let n = c.two[l.gen].src.len();
            LayerDoc {
                left: names(c, &c.slice(p, 0, l.offset)),
                gen: c.two[l.gen].name.clone(),
                right: names(c, &c.slice(p, l.offset + n, p.len())),
            }
        })
        .collect();
    let object = if t.src.is_empty() { Some(c.objects[t.src.start].clone()) } else { None };
    TermDoc { src_path: names(c, &t.src), object, layers }
}

impl PresentationDoc {
    pub fn into_presentation(self) -> Result<Presentation, PresentationError> {
        let mut c = Computad::new();
        for o in &self.objects {
            c.add_object(o)?;
        }
        for g in &self.one_generators {
            c.add_one(&g.name, &g.src, &g.tgt)?;
        }
        for g in &self.two_generators {
            let object = object_field(&c, &g.object)?;
            let hint = |p: &[String]| p.first().and_then(|e| c.one_gen(e).ok()).map(|e| c.one[e].src);
            let start = object.or_else(|| hint(&g.src_path)).or_else(|| hint(&g.tgt_path));
            let src = resolve_path(&c, &g.src_path, start)?;
            let tgt = resolve_path(&c, &g.tgt_path, start)?;
            let shape = match &g.shape {
                None => Shape::Opaque,
                Some(s) => Shape::parse(s).ok_or_else(|| err(format!("unknown shape `{s}`")))?,
            };
            c.add_two(&g.name, src, tgt, shape)?;
        }
        let mut p = Presentation::free(self.name.unwrap_or_else(|| "presentation".into()), c);
        for r in &self.one_rules {
            let lhs = resolve_path(&p.computad, &r.lhs, None)?;
            let rhs = resolve_path(&p.computad, &r.rhs, Some(lhs.start))?;
            p.add_rule(lhs, rhs)?;
        }
        for (i, r) in self.two_relations.iter().enumerate() {
            let lhs = term_from_doc(&p.computad, &r.lhs, None)?;
            let rhs = term_from_doc(&p.computad, &r.rhs, Some(lhs.src.start))?;
            let name = r.name.clone().unwrap_or_else(|| format!("relation {i}"));
            p.add_relation(name, lhs, rhs)?;
        }
        p.oracle = match &self.oracle {
            None => None,
            Some(o) => Some(Oracle::parse(o).ok_or_else(|| err(format!("unknown oracle `{o}`")))?),
        };
        p.validate()?;
        Ok(p)
    }

    pub fn from_presentation(p: &Presentation) -> Self {
        let c = &p.computad;
        PresentationDoc {
            name: Some(p.name.clone()),
            objects: c.objects.clone(),
            one_generators: c
                .one
                .iter()
                .map(|g| OneGenDoc { name: g.name.clone(), src: c.objects[g.src].clone(), tgt: c.objects[g.tgt].clone() })
                .collect(),
            two_generators: c
                .two
                .iter()
                .map(|g| TwoGenDoc {
                    name: g.name.clone(),
                    src_path: names(c, &g.src),
                    tgt_path: names(c, &g.tgt),
                    object: (g.src.is_empty() && g.tgt.is_empty()).then(|| c.objects[g.src.start].clone()),
                    shape: (g.shape != Shape::Opaque).then(|| g.shape.as_str().to_string()),
                })
                .collect(),
            one_rules: p.rules.iter().map(|r| RuleDoc { lhs: names(c, &r.lhs), rhs: names(c, &r.rhs) }).collect(),
            two_relations: p
                .relations
                .iter()
                .map(|r| RelationDoc {
                    name: Some(r.name.clone()),
                    lhs: term_to_doc(c, &r.lhs),
                    rhs: term_to_doc(c, &r.rhs),
                })
                .collect(),
            oracle: p.oracle.map(|o| o.key().to_string()),
        }
    }
}

pub fn parse_presentation(json: &str) -> Result<Presentation, PresentationError> {
    let doc: PresentationDoc = serde_json::from_str(json).map_err(|e| PresentationError::Parse(e.to_string()))?;
    doc.into_presentation()
}

/// Pretty JSON with a trailing newline; stable for a fixed presentation.
pub fn presentation_to_json(p: &Presentation) -> String {
    let mut s = serde_json::to_string_pretty(&PresentationDoc::from_presentation(p)).expect("serializable");
    s.push('\n');
    s
}

/// Objects and 1-generators as a DOT digraph. 2-generators are listed in a
/// comment, one per line.
pub fn to_dot(p: &Presentation) -> String {
    let c = &p.computad;
    let quote = |s: &str| format!("\"{}\"", s.replace('\\', "\\\\").replace('"', "\\\""));
    let mut out = format!("digraph {} {{\n", quote(&p.name));
    for o in &c.objects {
        out.push_str(&format!("  {};\n", quote(o)));
    }
    for g in &c.one {
        out.push_str(&format!("  {} -> {} [label={}];\n", quote(&c.objects[g.src]), quote(&c.objects[g.tgt]), quote(&g.name)));
    }
    for g in &c.two {
        out.push_str(&format!("  // {}: {} => {}\n", g.name, c.show_path(&g.src), c.show_path(&g.tgt)));
    }
    out.push_str("}\n");
    out
}
