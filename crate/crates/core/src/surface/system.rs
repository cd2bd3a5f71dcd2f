use std::collections::HashMap;

use super::expr::{builtins, Binding, Compiler, Parser, SetExpr};
use super::lexer::Tok;
use super::{ParseError, Pos, SurfaceError};
use crate::decoration::{decorate, Labeling};
use crate::kernel::{Limits, NodeId, SetGraph, SetValue};

/// A solved system of set equations.
///
/// Either a list of equations `name = body;` with an optional `point name;`
/// (default: the first equation), or a single expression such as the
/// printed form `{ {}, x1 } where x1 = { {}, x1 }`, whose head is the point.
#[derive(Clone, Debug, PartialEq)]
pub struct SystemSpec {
    pub equations: Vec<Binding>,
    /// Name of the point; `None` when the point is an unnamed expression.
    pub point_name: Option<String>,
    /// The value of each equation, in order.
    pub values: Vec<SetValue>,
    pub point: SetValue,
}

impl SystemSpec {
    pub fn value(&self, name: &str) -> Option<&SetValue> {
        self.equations
            .iter()
            .position(|b| b.name == name)
            .map(|i| &self.values[i])
    }
}

pub fn parse_system(text: &str) -> Result<SystemSpec, SurfaceError> {
    let mut p = Parser::new(text)?;
    let equation_mode = matches!(p.peek(), Tok::Ident(_)) && p.peek_at(1) == &Tok::Eq
        || p.is_ident(0, "point") && matches!(p.peek_at(1), Tok::Ident(_));
    if !equation_mode {
        if p.peek() == &Tok::Eof {
            return Err(ParseError::new(p.pos(), "empty system".to_string()).into());
        }
        let e = p.set_expr(true)?;
        p.eat(&Tok::Semi);
        p.expect_end()?;
        let (head, equations) = match e {
            SetExpr::Where(head, bs) => (*head, bs),
            other => (other, Vec::new()),
        };
        return solve(equations, None, Some(head));
    }

    let mut equations = Vec::new();
    let mut point: Option<(String, Pos)> = None;
    while p.peek() != &Tok::Eof {
        if p.is_ident(0, "point") && matches!(p.peek_at(1), Tok::Ident(_)) {
            let at = p.next().1;
            if point.is_some() {
                return Err(ParseError::new(at, "point is declared twice".to_string()).into());
            }
            point = Some(p.ident()?);
        } else {
            equations.push(p.binding()?);
        }
        if !p.eat(&Tok::Semi) && p.peek() != &Tok::Eof {
            return Err(p.unexpected("`;`").into());
        }
    }
    let name = match point {
        Some((name, pos)) => {
            if !equations.iter().any(|b| b.name == name) {
                return Err(ParseError::new(pos, format!("undefined name `{name}`")).into());
            }
            name
        }
        None => match equations.first() {
            Some(b) => b.name.clone(),
            None => return Err(ParseError::new(p.pos(), "no equations".to_string()).into()),
        },
    };
    solve(equations, Some(name), None)
}

fn solve(
    equations: Vec<Binding>,
    point_name: Option<String>,
    head: Option<SetExpr>,
) -> Result<SystemSpec, SurfaceError> {
    let env = builtins();
    let mut c = Compiler::new(&env, Limits::default());
    let ids = c.open_group(&equations)?;
    let point_node = match (&point_name, &head) {
        (_, Some(h)) => c.compile(h)?,
        (Some(name), None) => ids[equations.iter().position(|b| &b.name == name).expect("checked")],
        (None, None) => unreachable!("a system has a point"),
    };
    let g = c.finish()?;
    let d = decorate(&g);
    Ok(SystemSpec {
        values: ids.iter().map(|&n| d[n].clone()).collect(),
        point: d[point_node].clone(),
        equations,
        point_name,
    })
}

/// A graph given edge by edge, with optional node labels.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GraphSpec {
    /// Node names in order of first appearance; node `i` is `names[i]`.
    pub names: Vec<String>,
    pub graph: SetGraph,
    pub labeling: Labeling,
}

/// Parses statements `a -> b, c;`, `a;` (a bare node) and
/// `label a = setexpr;`.
pub fn parse_graph_file(text: &str) -> Result<GraphSpec, SurfaceError> {
    let mut p = Parser::new(text)?;
    let mut names: Vec<String> = Vec::new();
    let mut index: HashMap<String, NodeId> = HashMap::new();
    let mut graph = SetGraph::new(0);
    let mut node = |name: String, graph: &mut SetGraph| -> NodeId {
        *index.entry(name.clone()).or_insert_with(|| {
            names.push(name);
            graph.add_node()
        })
    };
    let mut labels: Vec<(String, Pos, SetExpr)> = Vec::new();
    while p.peek() != &Tok::Eof {
        if p.is_ident(0, "label") && matches!(p.peek_at(1), Tok::Ident(_)) {
            p.next();
            let (name, pos) = p.ident()?;
            p.expect(Tok::Eq)?;
            let e = p.set_expr(true)?;
            labels.push((name, pos, e));
        } else {
            let (a, _) = p.ident()?;
            let a = node(a, &mut graph);
            if p.eat(&Tok::Arrow) {
                loop {
                    let (b, _) = p.ident()?;
                    let b = node(b, &mut graph);
                    graph.add_edge(a, b)?;
                    if !p.eat(&Tok::Comma) {
                        break;
                    }
                }
            }
        }
        if !p.eat(&Tok::Semi) && p.peek() != &Tok::Eof {
            return Err(p.unexpected("`;`").into());
        }
    }
    let env = builtins();
    let mut labeling = Labeling::new();
    for (name, pos, e) in labels {
        let Some(&n) = index.get(&name) else {
            return Err(ParseError::new(pos, format!("undefined node `{name}`")).into());
        };
        if labeling.get(n).is_some() {
            return Err(ParseError::new(pos, format!("`{name}` is labeled twice")).into());
        }
        let mut c = Compiler::new(&env, Limits::default());
        let root = c.compile(&e)?;
        let g = c.finish()?;
        labeling.set(n, SetValue::from_graph(&g, root)?);
    }
    Ok(GraphSpec {
        names,
        graph,
        labeling,
    })
}
