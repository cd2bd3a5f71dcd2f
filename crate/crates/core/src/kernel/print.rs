//! Text form of canonical sets.
//!
//! Well-founded sets print as nested braces: `{}`, `{ {} }`,
//! `{ {}, { {} } }`. Nodes that lie on a cycle, and acyclic nodes whose
//! inline text would be large, are bound to names `x<i>` (`i` is the
//! canonical node index) and listed after `where`:
//!
//! ```text
//! x0 where x0 = {x0}
//! { {}, x1 } where x1 = { {}, x1 }
//! ```
//!
//! A brace list whose elements are all names prints without inner
//! padding (`{x0}`); any other non-empty list is padded (`{ {}, x1 }`).
//! Elements appear in canonical node order. The output parses back to the
//! same set, so printing is injective.

use super::graph::NodeId;
use super::value::SetValue;

/// Acyclic nodes whose unfolded tree has more nodes than this get a name.
const INLINE_LIMIT: usize = 16;

pub(crate) fn render(value: &SetValue) -> String {
    let g = value.graph();
    let n = g.node_count();
    let cyclic = g.on_cycle();

    // Tree size of the inline text of each acyclic node, children first.
    let mut named = cyclic.clone();
    let mut size = vec![0usize; n];
    let mut state = vec![0u8; n];
    for start in 0..n {
        if cyclic[start] || state[start] == 2 {
            continue;
        }
        let mut stack = vec![(start, false)];
        while let Some((v, expanded)) = stack.pop() {
            if expanded {
                let s = 1 + g
                    .children(NodeId::new(v))
                    .iter()
                    .map(|c| if named[c.index()] { 1 } else { size[c.index()] })
                    .sum::<usize>();
                size[v] = s;
                named[v] = v != 0 && s > INLINE_LIMIT;
                state[v] = 2;
                continue;
            }
            if state[v] != 0 {
                continue;
            }
            state[v] = 1;
            stack.push((v, true));
            for &c in g.children(NodeId::new(v)) {
                if !cyclic[c.index()] && state[c.index()] == 0 {
                    stack.push((c.index(), false));
                }
            }
        }
    }

    let mut out = String::new();
    if named[0] {
        out.push_str("x0");
    } else {
        write_body(value, 0, &named, &mut out);
    }
    let mut first = true;
    for v in 0..n {
        if !named[v] {
            continue;
        }
        out.push_str(if first { " where " } else { "; " });
        first = false;
        out.push_str(&format!("x{v} = "));
        write_body(value, v, &named, &mut out);
    }
    out
}

fn write_body(value: &SetValue, v: usize, named: &[bool], out: &mut String) {
    let kids = value.graph().children(NodeId::new(v));
    if kids.is_empty() {
        out.push_str("{}");
        return;
    }
    let compact = kids.iter().all(|c| named[c.index()]);
    out.push_str(if compact { "{" } else { "{ " });
    for (i, c) in kids.iter().enumerate() {
        if i > 0 {
            out.push_str(", ");
        }
        if named[c.index()] {
            out.push_str(&format!("x{}", c.index()));
        } else {
            write_body(value, c.index(), named, out);
        }
    }
    out.push_str(if compact { "}" } else { " }" });
}
