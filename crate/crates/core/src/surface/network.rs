use std::collections::HashMap;

use super::expr::Parser;
use super::lexer::Tok;
use super::{ParseError, Pos};
use crate::encodings::Rational;
use crate::kernel::{NodeId, SetGraph};
use crate::neural::{NeuralNet, NeuralState};

/// A network file:
///
/// ```text
/// neurons: a b c
/// synapses:
///   a -> b 1/2
///   a -> c 1/3
///   c -> b 1/4
/// voltages: b = 1      # unlisted neurons are at 0
/// params: alpha = 1/2, theta = 0
/// point: a             # default: the first neuron
/// ```
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct NetworkSpec {
    pub neurons: Vec<String>,
    pub synapses: Vec<(String, String, Rational)>,
    pub voltages: Vec<(String, bool)>,
    pub alpha: Rational,
    pub theta: Rational,
    pub point: String,
}

impl NetworkSpec {
    pub fn build(&self) -> crate::Result<(NeuralNet, NeuralState)> {
        let index: HashMap<&str, usize> = self
            .neurons
            .iter()
            .enumerate()
            .map(|(i, n)| (n.as_str(), i))
            .collect();
        let id = |name: &str| -> crate::Result<usize> {
            index
                .get(name)
                .copied()
                .ok_or_else(|| crate::Error::InvalidNetwork(format!("unknown neuron `{name}`")))
        };
        let mut edges = Vec::with_capacity(self.synapses.len());
        for (a, b, _) in &self.synapses {
            edges.push((id(a)?, id(b)?));
        }
        let graph = SetGraph::from_edges(self.neurons.len(), edges.iter().copied())?;
        let net = NeuralNet::new(
            graph,
            self.alpha.clone(),
            self.theta.clone(),
            NodeId::new(id(&self.point)?),
        )?
        .with_names(self.neurons.clone())?;
        let mut weights = vec![Rational::zero(); net.edges().len()];
        for (&(a, b), (_, _, w)) in edges.iter().zip(&self.synapses) {
            let i = net
                .edge_id(NodeId::new(a), NodeId::new(b))
                .expect("edge was added");
            weights[i] = w.clone();
        }
        let mut voltages = vec![false; self.neurons.len()];
        for (n, v) in &self.voltages {
            voltages[id(n)?] = *v;
        }
        let state = NeuralState::new(&net, weights, voltages)?;
        Ok((net, state))
    }
}

fn rational(p: &mut Parser) -> Result<Rational, ParseError> {
    let pos = p.pos();
    let negative = if p.eat(&Tok::Minus) {
        true
    } else {
        p.eat(&Tok::Plus);
        false
    };
    let (numer, _) = p.nat()?;
    let denom = if p.eat(&Tok::Slash) { p.nat()?.0 } else { 1 };
    if denom == 0 {
        return Err(ParseError::new(pos, "malformed rational: zero denominator".to_string()));
    }
    let numer = i64::try_from(numer)
        .map_err(|_| ParseError::new(pos, "malformed rational: numerator too large".to_string()))?;
    let denom = i64::try_from(denom)
        .map_err(|_| ParseError::new(pos, "malformed rational: denominator too large".to_string()))?;
    Ok(Rational::new(if negative { -numer } else { numer }, denom))
}

fn at_section(p: &Parser) -> bool {
    matches!(p.peek(), Tok::Ident(_)) && p.peek_at(1) == &Tok::Colon || p.peek() == &Tok::Eof
}

fn separator(p: &mut Parser) {
    if !p.eat(&Tok::Comma) {
        p.eat(&Tok::Semi);
    }
}

pub fn parse_network(text: &str) -> Result<NetworkSpec, ParseError> {
    let mut p = Parser::new(text)?;
    let mut seen: HashMap<String, Pos> = HashMap::new();
    let mut neurons: Vec<(String, Pos)> = Vec::new();
    let mut synapses: Vec<(String, Pos, String, Pos, Rational)> = Vec::new();
    let mut voltages: Vec<(String, Pos, bool)> = Vec::new();
    let mut alpha: Option<Rational> = None;
    let mut theta: Option<Rational> = None;
    let mut point: Option<(String, Pos)> = None;

    while p.peek() != &Tok::Eof {
        let (section, pos) = p.ident()?;
        p.expect(Tok::Colon)?;
        if seen.insert(section.clone(), pos).is_some() {
            return Err(ParseError::new(pos, format!("section `{section}` appears twice")));
        }
        match section.as_str() {
            "neurons" => {
                while !at_section(&p) {
                    neurons.push(p.ident()?);
                    separator(&mut p);
                }
            }
            "synapses" => {
                while !at_section(&p) {
                    let (a, pa) = p.ident()?;
                    p.expect(Tok::Arrow)?;
                    let (b, pb) = p.ident()?;
                    let w = rational(&mut p)?;
                    synapses.push((a, pa, b, pb, w));
                    separator(&mut p);
                }
            }
            "voltages" => {
                while !at_section(&p) {
                    let (a, pa) = p.ident()?;
                    p.expect(Tok::Eq)?;
                    let (v, pv) = p.nat()?;
                    if v > 1 {
                        return Err(ParseError::new(pv, "voltages are 0 or 1".to_string()));
                    }
                    voltages.push((a, pa, v == 1));
                    separator(&mut p);
                }
            }
            "params" => {
                while !at_section(&p) {
                    let (name, pn) = p.ident()?;
                    p.expect(Tok::Eq)?;
                    let r = rational(&mut p)?;
                    let slot = match name.as_str() {
                        "alpha" => &mut alpha,
                        "theta" => &mut theta,
                        _ => {
                            return Err(ParseError::new(
                                pn,
                                format!("unknown parameter `{name}` (expected alpha or theta)"),
                            ))
                        }
                    };
                    if slot.replace(r).is_some() {
                        return Err(ParseError::new(pn, format!("`{name}` is set twice")));
                    }
                    separator(&mut p);
                }
            }
            "point" => {
                point = Some(p.ident()?);
                separator(&mut p);
            }
            _ => {
                return Err(ParseError::new(
                    pos,
                    format!("unknown section `{section}` (expected neurons, synapses, voltages, params or point)"),
                ))
            }
        }
    }
    let end = p.pos();

    let mut declared: HashMap<&str, Pos> = HashMap::new();
    for (n, pos) in &neurons {
        if declared.insert(n, *pos).is_some() {
            return Err(ParseError::new(*pos, format!("neuron `{n}` is declared twice")));
        }
    }
    if neurons.is_empty() {
        return Err(ParseError::new(end, "no neurons declared".to_string()));
    }
    let check = |name: &str, pos: Pos| -> Result<(), ParseError> {
        if declared.contains_key(name) {
            Ok(())
        } else {
            Err(ParseError::new(pos, format!("undefined neuron `{name}`")))
        }
    };
    let mut pairs = HashMap::new();
    for (a, pa, b, pb, _) in &synapses {
        check(a, *pa)?;
        check(b, *pb)?;
        if pairs.insert((a, b), ()).is_some() {
            return Err(ParseError::new(*pa, format!("synapse `{a} -> {b}` is defined twice")));
        }
    }
    let mut set_v = HashMap::new();
    for (a, pa, _) in &voltages {
        check(a, *pa)?;
        if set_v.insert(a, ()).is_some() {
            return Err(ParseError::new(*pa, format!("voltage of `{a}` is set twice")));
        }
    }
    let point = match point {
        Some((n, pos)) => {
            check(&n, pos)?;
            n
        }
        None => neurons[0].0.clone(),
    };
    let missing = |what: &str| ParseError::new(end, format!("missing parameter `{what}`"));
    Ok(NetworkSpec {
        alpha: alpha.ok_or_else(|| missing("alpha"))?,
        theta: theta.ok_or_else(|| missing("theta"))?,
        neurons: neurons.into_iter().map(|(n, _)| n).collect(),
        synapses: synapses.into_iter().map(|(a, _, b, _, w)| (a, b, w)).collect(),
        voltages: voltages.into_iter().map(|(a, _, v)| (a, v)).collect(),
        point,
    })
}
