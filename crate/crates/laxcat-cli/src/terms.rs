//! A compact syntax for 2-cells of a presentation.
//!
//! A term is `id(p)` or layers separated by `;`, applied top to bottom.
//! A layer is `l1 .. [g] .. r1`: the generator in brackets whiskered by
//! the 1-generators around it. `id()` and empty whiskers need `@object`
//! when the start cannot be read off: `id(@A)`, `@A [eta] t`.
//! A term starting with `{` is read as a JSON term document instead.

use laxcat::presentation::io::{term_from_doc, LayerDoc, TermDoc};
use laxcat::{Presentation, Term};

use crate::CliError;

fn bad(s: &str, why: &str) -> CliError {
    CliError::Parse(format!("term `{s}`: {why}"))
}

fn split_object(s: &str) -> (Option<String>, &str) {
    let s = s.trim();
    match s.strip_prefix('@') {
        Some(rest) => {
            let end = rest.find(char::is_whitespace).unwrap_or(rest.len());
            (Some(rest[..end].to_string()), rest[end..].trim())
        }
        None => (None, s),
    }
}

fn words(s: &str) -> Vec<String> {
    s.split_whitespace().map(str::to_string).collect()
}

fn layer(s: &str) -> Result<LayerDoc, CliError> {
    let open = s.find('[').ok_or_else(|| bad(s, "a layer needs a generator in brackets"))?;
    let close = s.find(']').filter(|&c| c > open).ok_or_else(|| bad(s, "unclosed bracket"))?;
    let gen = s[open + 1..close].trim();
    if gen.is_empty() || s[close + 1..].contains('[') {
        return Err(bad(s, "exactly one generator per layer"));
    }
    Ok(LayerDoc { left: words(&s[..open]), gen: gen.into(), right: words(&s[close + 1..]) })
}

fn to_doc(p: &Presentation, s: &str) -> Result<TermDoc, CliError> {
    let (object, rest) = split_object(s);
    if let Some(inner) = rest.strip_prefix("id(").and_then(|r| r.strip_suffix(')')) {
        let (inner_object, path) = split_object(inner);
        return Ok(TermDoc { src_path: words(path), object: object.or(inner_object), layers: Vec::new() });
    }
    let layers = rest.split(';').map(|l| layer(l.trim())).collect::<Result<Vec<_>, _>>()?;
    let first = &layers[0];
    let c = &p.computad;
    let g = c.two_gen(&first.gen).map_err(|e| CliError::Parse(e.to_string()))?;
    let mut src_path = first.left.clone();
    src_path.extend(c.two[g].src.edges.iter().map(|&e| c.one[e].name.clone()));
    src_path.extend(first.right.iter().cloned());
    Ok(TermDoc { src_path, object, layers })
}

pub fn parse_term(p: &Presentation, s: &str) -> Result<Term, CliError> {
    let doc = if s.trim_start().starts_with('{') {
        serde_json::from_str(s).map_err(|e| bad(s, &e.to_string()))?
    } else {
        to_doc(p, s)?
    };
    term_from_doc(&p.computad, &doc, None).map_err(|e| bad(s, &e.to_string()))
}

#[cfg(test)]
mod tests {
    use super::*;
    use laxcat::monads::mnd_presentation;

    #[test]
    fn layers_read_top_to_bottom() {
        let p = mnd_presentation();
        let t = parse_term(&p, "t [eta] ; [mu]").unwrap();
        assert_eq!(t.layers.len(), 2);
        assert_eq!(p.computad.show_path(&t.src), p.computad.show_path(&p.p(&["t"])));
    }

    #[test]
    fn identities_need_their_path() {
        let p = mnd_presentation();
        assert_eq!(parse_term(&p, "id(t t)").unwrap().src, p.p(&["t", "t"]));
        assert!(parse_term(&p, "id(@A)").unwrap().src.is_empty());
        assert!(parse_term(&p, "[mu] [mu]").is_err());
    }
}
