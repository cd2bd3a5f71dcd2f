//! Set and operator expressions: syntax tree, parser and evaluator.

use std::collections::{BTreeMap, HashMap, HashSet};

use super::lexer::{lex, Tok};
use super::{ParseError, Pos, SurfaceError};
use crate::encodings::nat_to_set;
use crate::kernel::{Limits, NodeId, SetGraph, SetValue};
use crate::operators::{Evaluator, OperatorExpr};

/// Names visible to an expression besides its own `where` bindings.
pub type Env = BTreeMap<String, SetValue>;

/// The built-in names: `omega` is the Quine atom.
pub fn builtins() -> Env {
    let mut env = Env::new();
    env.insert("omega".to_string(), SetValue::quine_atom());
    env
}

#[derive(Clone, Debug, PartialEq)]
pub enum SetExpr {
    Braces(Vec<SetExpr>),
    Name(String, Pos),
    Nat(usize, Pos),
    Apply(Box<OpAst>, Box<SetExpr>),
    Where(Box<SetExpr>, Vec<Binding>),
}

/// `name = body` inside a `where` clause or a system.
#[derive(Clone, Debug, PartialEq)]
pub struct Binding {
    pub name: String,
    pub pos: Pos,
    pub body: SetExpr,
}

#[derive(Clone, Debug, PartialEq)]
pub enum OpAst {
    Atom(OperatorExpr),
    K(Box<SetExpr>),
    Compose(Box<OpAst>, Box<OpAst>),
    Union(Box<OpAst>, Box<OpAst>),
    Intersect(Box<OpAst>, Box<OpAst>),
    Diff(Box<OpAst>, Box<OpAst>),
}

const OPERATOR_ATOMS: [&str; 8] = ["E", "I", "B", "R", "T", "D", "C", "Kdiag"];

fn atom(name: &str) -> Option<OperatorExpr> {
    Some(match name {
        "E" => OperatorExpr::Elim,
        "I" => OperatorExpr::Ident,
        "B" => OperatorExpr::Brace,
        "R" => OperatorExpr::Russell,
        "T" => OperatorExpr::AntiRussell,
        "D" => OperatorExpr::Dual,
        "C" => OperatorExpr::Conscious,
        "Kdiag" => OperatorExpr::KDiag,
        _ => return None,
    })
}

pub(crate) struct Parser {
    toks: Vec<(Tok, Pos)>,
    i: usize,
}

impl Parser {
    pub(crate) fn new(text: &str) -> Result<Self, ParseError> {
        Ok(Parser {
            toks: lex(text)?,
            i: 0,
        })
    }

    pub(crate) fn peek(&self) -> &Tok {
        self.peek_at(0)
    }

    pub(crate) fn peek_at(&self, k: usize) -> &Tok {
        let j = (self.i + k).min(self.toks.len() - 1);
        &self.toks[j].0
    }

    pub(crate) fn pos(&self) -> Pos {
        self.toks[self.i].1
    }

    pub(crate) fn next(&mut self) -> (Tok, Pos) {
        let t = self.toks[self.i].clone();
        if self.i + 1 < self.toks.len() {
            self.i += 1;
        }
        t
    }

    pub(crate) fn eat(&mut self, t: &Tok) -> bool {
        if self.peek() == t {
            self.next();
            true
        } else {
            false
        }
    }

    pub(crate) fn unexpected(&self, wanted: &str) -> ParseError {
        ParseError::new(
            self.pos(),
            format!("expected {wanted}, found {}", self.peek().describe()),
        )
    }

    pub(crate) fn expect(&mut self, t: Tok) -> Result<Pos, ParseError> {
        if self.peek() == &t {
            Ok(self.next().1)
        } else {
            Err(self.unexpected(&t.describe()))
        }
    }

    pub(crate) fn ident(&mut self) -> Result<(String, Pos), ParseError> {
        match self.peek().clone() {
            Tok::Ident(s) => {
                let pos = self.next().1;
                Ok((s, pos))
            }
            _ => Err(self.unexpected("a name")),
        }
    }

    pub(crate) fn is_ident(&self, k: usize, word: &str) -> bool {
        matches!(self.peek_at(k), Tok::Ident(s) if s == word)
    }

    pub(crate) fn expect_end(&mut self) -> Result<(), ParseError> {
        if self.peek() == &Tok::Eof {
            Ok(())
        } else {
            Err(self.unexpected("end of input"))
        }
    }

    pub(crate) fn nat(&mut self) -> Result<(usize, Pos), ParseError> {
        match self.peek().clone() {
            Tok::Nat(s) => {
                let pos = self.next().1;
                s.parse()
                    .map(|n| (n, pos))
                    .map_err(|_| ParseError::new(pos, format!("number `{s}` is too large")))
            }
            _ => Err(self.unexpected("a number")),
        }
    }

    fn starts_operator(&self) -> bool {
        match self.peek() {
            Tok::Ident(s) if s == "K" => self.peek_at(1) == &Tok::LBracket,
            Tok::Ident(s) if OPERATOR_ATOMS.contains(&s.as_str()) => {
                matches!(self.peek_at(1), Tok::LParen | Tok::Dot)
            }
            Tok::LParen => true,
            _ => false,
        }
    }

    /// `primary ["where" binding (";" binding)*]`; `where` clauses are only
    /// parsed where `allow_where` is set, so they cannot swallow the `;`
    /// separating system equations.
    pub(crate) fn set_expr(&mut self, allow_where: bool) -> Result<SetExpr, ParseError> {
        let head = self.primary()?;
        if !(allow_where && self.is_ident(0, "where")) {
            return Ok(head);
        }
        self.next();
        let mut bindings = vec![self.binding()?];
        while self.peek() == &Tok::Semi {
            self.next();
            if matches!(self.peek(), Tok::Ident(_)) && self.peek_at(1) == &Tok::Eq {
                bindings.push(self.binding()?);
            } else {
                break;
            }
        }
        Ok(SetExpr::Where(Box::new(head), bindings))
    }

    pub(crate) fn binding(&mut self) -> Result<Binding, ParseError> {
        let (name, pos) = self.ident()?;
        if name == "where" {
            return Err(ParseError::new(pos, "`where` is reserved".to_string()));
        }
        self.expect(Tok::Eq)?;
        let body = self.set_expr(false)?;
        Ok(Binding { name, pos, body })
    }

    fn primary(&mut self) -> Result<SetExpr, ParseError> {
        if self.starts_operator() {
            let op = self.op_expr()?;
            self.expect(Tok::LParen)?;
            let arg = self.set_expr(true)?;
            self.expect(Tok::RParen)?;
            return Ok(SetExpr::Apply(Box::new(op), Box::new(arg)));
        }
        match self.peek().clone() {
            Tok::LBrace => {
                self.next();
                let mut items = Vec::new();
                while self.peek() != &Tok::RBrace {
                    items.push(self.set_expr(true)?);
                    if !self.eat(&Tok::Comma) {
                        break;
                    }
                }
                self.expect(Tok::RBrace)?;
                Ok(SetExpr::Braces(items))
            }
            Tok::Nat(_) => {
                let (n, pos) = self.nat()?;
                Ok(SetExpr::Nat(n, pos))
            }
            Tok::Ident(s) if s != "where" => {
                let pos = self.next().1;
                Ok(SetExpr::Name(s, pos))
            }
            _ => Err(self.unexpected("a set expression")),
        }
    }

    /// `.` binds tighter than `|`, `&` and `-`, which associate to the left.
    pub(crate) fn op_expr(&mut self) -> Result<OpAst, ParseError> {
        let mut lhs = self.op_term()?;
        loop {
            let make: fn(Box<OpAst>, Box<OpAst>) -> OpAst = match self.peek() {
                Tok::Pipe => OpAst::Union,
                Tok::Amp => OpAst::Intersect,
                Tok::Minus => OpAst::Diff,
                _ => return Ok(lhs),
            };
            self.next();
            let rhs = self.op_term()?;
            lhs = make(Box::new(lhs), Box::new(rhs));
        }
    }

    fn op_term(&mut self) -> Result<OpAst, ParseError> {
        let mut lhs = self.op_factor()?;
        while self.peek() == &Tok::Dot {
            self.next();
            let rhs = self.op_factor()?;
            lhs = OpAst::Compose(Box::new(lhs), Box::new(rhs));
        }
        Ok(lhs)
    }

    fn op_factor(&mut self) -> Result<OpAst, ParseError> {
        match self.peek().clone() {
            Tok::LParen => {
                self.next();
                let e = self.op_expr()?;
                self.expect(Tok::RParen)?;
                Ok(e)
            }
            Tok::Ident(s) if s == "K" => {
                self.next();
                self.expect(Tok::LBracket)?;
                let a = self.set_expr(true)?;
                self.expect(Tok::RBracket)?;
                Ok(OpAst::K(Box::new(a)))
            }
            Tok::Ident(s) => match atom(&s) {
                Some(op) => {
                    self.next();
                    Ok(OpAst::Atom(op))
                }
                None => Err(self.unexpected("an operator (E I B R T D C K[..] Kdiag)")),
            },
            _ => Err(self.unexpected("an operator (E I B R T D C K[..] Kdiag)")),
        }
    }
}

/// Builds one graph from expressions, resolving names and `where` groups.
pub(crate) struct Compiler<'a> {
    env: &'a Env,
    limits: Limits,
    graph: SetGraph,
    /// `(node, defined as, position)` for bindings whose body is not a brace
    /// list; resolved by copying the target's children once all is built.
    aliases: Vec<(NodeId, NodeId, Pos)>,
    scopes: Vec<HashMap<String, NodeId>>,
    enclosing: HashSet<String>,
}

impl<'a> Compiler<'a> {
    pub(crate) fn new(env: &'a Env, limits: Limits) -> Self {
        Compiler {
            env,
            limits,
            graph: SetGraph::new(0),
            aliases: Vec::new(),
            scopes: Vec::new(),
            enclosing: HashSet::new(),
        }
    }

    fn lookup(&self, name: &str) -> Option<NodeId> {
        self.scopes.iter().rev().find_map(|s| s.get(name).copied())
    }

    pub(crate) fn compile(&mut self, e: &SetExpr) -> Result<NodeId, SurfaceError> {
        match e {
            SetExpr::Braces(items) => {
                let n = self.graph.add_node();
                for item in items {
                    let k = self.compile(item)?;
                    self.graph.add_edge(n, k)?;
                }
                Ok(n)
            }
            SetExpr::Name(name, pos) => {
                if let Some(n) = self.lookup(name) {
                    return Ok(n);
                }
                if let Some(v) = self.env.get(name) {
                    return Ok(self.graph.append(v.graph()));
                }
                let msg = if self.enclosing.contains(name) {
                    format!("`{name}` is still being defined and cannot be an operator argument")
                } else {
                    format!("undefined name `{name}`")
                };
                Err(ParseError::new(*pos, msg).into())
            }
            SetExpr::Nat(n, _) => {
                self.limits.check(n.saturating_add(1))?;
                Ok(self.graph.append(nat_to_set(*n).graph()))
            }
            SetExpr::Apply(op, arg) => {
                let op = self.operator(op)?;
                let x = self.closed_value(arg)?;
                let v = Evaluator::new(self.limits).apply(&op, &x)?;
                Ok(self.graph.append(v.graph()))
            }
            SetExpr::Where(head, bindings) => {
                self.open_group(bindings)?;
                let n = self.compile(head);
                self.scopes.pop();
                n
            }
        }
    }

    /// Declares and compiles a group of mutually recursive bindings, leaving
    /// their scope open. Returns the node of each binding.
    pub(crate) fn open_group(&mut self, bindings: &[Binding]) -> Result<Vec<NodeId>, SurfaceError> {
        let mut scope = HashMap::new();
        let mut ids = Vec::with_capacity(bindings.len());
        for b in bindings {
            let n = self.graph.add_node();
            if scope.insert(b.name.clone(), n).is_some() {
                return Err(ParseError::new(b.pos, format!("`{}` is defined twice", b.name)).into());
            }
            ids.push(n);
        }
        self.scopes.push(scope);
        for (b, &n) in bindings.iter().zip(&ids) {
            match &b.body {
                SetExpr::Braces(items) => {
                    for item in items {
                        let k = self.compile(item)?;
                        self.graph.add_edge(n, k)?;
                    }
                }
                other => {
                    let k = self.compile(other)?;
                    self.aliases.push((n, k, b.pos));
                }
            }
        }
        Ok(ids)
    }

    /// Value of an expression that may not refer to enclosing bindings.
    fn closed_value(&mut self, e: &SetExpr) -> Result<SetValue, SurfaceError> {
        let mut sub = Compiler::new(self.env, self.limits);
        sub.enclosing = self
            .scopes
            .iter()
            .flat_map(|s| s.keys().cloned())
            .chain(self.enclosing.iter().cloned())
            .collect();
        let root = sub.compile(e)?;
        let g = sub.finish()?;
        Ok(SetValue::from_graph(&g, root)?)
    }

    pub(crate) fn operator(&mut self, op: &OpAst) -> Result<OperatorExpr, SurfaceError> {
        let pair = |c: &mut Self, a: &OpAst, b: &OpAst| -> Result<_, SurfaceError> {
            Ok((Box::new(c.operator(a)?), Box::new(c.operator(b)?)))
        };
        Ok(match op {
            OpAst::Atom(o) => o.clone(),
            OpAst::K(a) => OperatorExpr::KParam(self.closed_value(a)?),
            OpAst::Compose(a, b) => {
                let (a, b) = pair(self, a, b)?;
                OperatorExpr::Compose(a, b)
            }
            OpAst::Union(a, b) => {
                let (a, b) = pair(self, a, b)?;
                OperatorExpr::Union(a, b)
            }
            OpAst::Intersect(a, b) => {
                let (a, b) = pair(self, a, b)?;
                OperatorExpr::Intersect(a, b)
            }
            OpAst::Diff(a, b) => {
                let (a, b) = pair(self, a, b)?;
                OperatorExpr::Diff(a, b)
            }
        })
    }

    /// Resolves alias bindings and returns the finished graph.
    pub(crate) fn finish(mut self) -> Result<SetGraph, SurfaceError> {
        let alias_of: HashMap<NodeId, (NodeId, Pos)> =
            self.aliases.iter().map(|&(n, k, p)| (n, (k, p))).collect();
        let mut resolved = Vec::with_capacity(self.aliases.len());
        for &(n, k, pos) in &self.aliases {
            let mut cur = k;
            let mut steps = 0;
            while let Some(&(next, _)) = alias_of.get(&cur) {
                cur = next;
                steps += 1;
                if steps > alias_of.len() {
                    return Err(ParseError::new(pos, "circular definition with no braces".to_string()).into());
                }
            }
            resolved.push((n, cur));
        }
        for (n, target) in resolved {
            let kids = self.graph.children(target).to_vec();
            for c in kids {
                self.graph.add_edge(n, c)?;
            }
        }
        self.limits.check(self.graph.node_count())?;
        Ok(self.graph)
    }
}

/// Parses a set expression without evaluating it.
pub fn parse_setexpr(text: &str) -> Result<SetExpr, ParseError> {
    let mut p = Parser::new(text)?;
    let e = p.set_expr(true)?;
    p.eat(&Tok::Semi);
    p.expect_end()?;
    Ok(e)
}

/// Parses and evaluates a set expression, resolving free names in `env`.
pub fn eval_setexpr(text: &str, env: &Env) -> Result<SetValue, SurfaceError> {
    eval_setexpr_with(text, env, Limits::default())
}

pub fn eval_setexpr_with(text: &str, env: &Env, limits: Limits) -> Result<SetValue, SurfaceError> {
    let e = parse_setexpr(text)?;
    let mut c = Compiler::new(env, limits);
    let root = c.compile(&e)?;
    let g = c.finish()?;
    Ok(SetValue::from_graph(&g, root)?)
}

/// Parses an operator expression such as `(I - R).B` or `K[{omega}]`.
pub fn parse_opexpr(text: &str) -> Result<OperatorExpr, SurfaceError> {
    let mut p = Parser::new(text)?;
    let ast = p.op_expr()?;
    p.expect_end()?;
    let env = builtins();
    Compiler::new(&env, Limits::default()).operator(&ast)
}
