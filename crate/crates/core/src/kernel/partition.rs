//! Coarsest bisimulation of a finite graph by relational partition
//! refinement (Paige & Tarjan, "Three partition refinement algorithms").
//!
//! Two nodes end up in the same block iff they are bisimilar, i.e. iff
//! they decorate to the same set. The refinement keeps a second, coarser
//! partition of compound blocks and always splits on the smaller half of a
//! compound block, which bounds the work by `O(m log n)`.
//!
//! Every decision the loop takes depends only on block ids, block sizes
//! and the order in which blocks were created, never on the numbering of
//! the input nodes. Block ids are therefore invariant under graph
//! isomorphism, which is what [`super::canon`] relies on to number the
//! nodes of a minimal graph canonically.

use super::graph::{NodeId, SetGraph};

const NONE: u32 = u32::MAX;

/// Assignment of every node of a graph to a bisimulation block.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Partition {
    block_of: Vec<u32>,
    block_count: usize,
}

impl Partition {
    pub fn block_of(&self, node: NodeId) -> usize {
        self.block_of[node.index()] as usize
    }

    pub fn block_count(&self) -> usize {
        self.block_count
    }

    pub fn node_count(&self) -> usize {
        self.block_of.len()
    }

    pub fn same_block(&self, a: NodeId, b: NodeId) -> bool {
        self.block_of[a.index()] == self.block_of[b.index()]
    }

    pub fn is_discrete(&self) -> bool {
        self.block_count == self.block_of.len()
    }

    /// Members of each block, blocks indexed by id, members ascending.
    pub fn blocks(&self) -> Vec<Vec<NodeId>> {
        let mut out = vec![Vec::new(); self.block_count];
        for (n, &b) in self.block_of.iter().enumerate() {
            out[b as usize].push(NodeId::new(n));
        }
        out
    }
}

/// Computes the coarsest bisimulation of `graph`.
pub fn coarsest_bisimulation(graph: &SetGraph) -> Partition {
    Refiner::new(graph.succ()).run()
}

#[derive(Clone, Copy)]
struct Block {
    start: u32,
    end: u32,
    marked: u32,
    compound: u32,
    pos_in_compound: u32,
}

impl Block {
    fn len(&self) -> u32 {
        self.end - self.start
    }
}

struct Refiner {
    // Refinable partition: each block is a contiguous range of `elems`.
    elems: Vec<u32>,
    loc: Vec<u32>,
    block_of: Vec<u32>,
    blocks: Vec<Block>,
    touched: Vec<u32>,

    // Compound blocks (the coarse partition); each lists its fine blocks.
    compounds: Vec<Vec<u32>>,
    // Compound blocks holding at least two fine blocks.
    pending: Vec<u32>,

    // Edge `e` runs from `edge_src[e]`; `preds[y]` lists edges into `y`.
    edge_src: Vec<u32>,
    preds: Vec<Vec<u32>>,
    // `counts[edge_count[e]]` = number of edges from src(e) into the
    // compound block currently containing tgt(e).
    edge_count: Vec<u32>,
    counts: Vec<u32>,

    // Scratch, indexed by node.
    new_rec: Vec<u32>,
    old_rec: Vec<u32>,
}

impl Refiner {
    fn new(succ: &[Vec<NodeId>]) -> Self {
        let n = succ.len();
        let mut edge_src = Vec::new();
        let mut preds = vec![Vec::new(); n];
        let mut edge_count = Vec::new();
        for (x, children) in succ.iter().enumerate() {
            for &y in children {
                let e = edge_src.len() as u32;
                edge_src.push(x as u32);
                edge_count.push(x as u32);
                preds[y.index()].push(e);
            }
        }
        let counts = succ.iter().map(|c| c.len() as u32).collect();
        Refiner {
            elems: (0..n as u32).collect(),
            loc: (0..n as u32).collect(),
            block_of: vec![0; n],
            blocks: Vec::new(),
            touched: Vec::new(),
            compounds: Vec::new(),
            pending: Vec::new(),
            edge_src,
            preds,
            edge_count,
            counts,
            new_rec: vec![NONE; n],
            old_rec: vec![NONE; n],
        }
    }

    fn run(mut self) -> Partition {
        let n = self.elems.len();
        if n == 0 {
            return Partition {
                block_of: Vec::new(),
                block_count: 0,
            };
        }
        self.blocks.push(Block {
            start: 0,
            end: n as u32,
            marked: 0,
            compound: 0,
            pos_in_compound: 0,
        });
        self.compounds.push(vec![0]);

        // Stabilise against the whole node set: nodes with children
        // versus childless nodes.
        for x in 0..n as u32 {
            if self.counts[x as usize] > 0 {
                self.mark(x);
            }
        }
        self.split_marked();

        while let Some(s) = self.pending.pop() {
            self.refine_with(s);
        }

        Partition {
            block_count: self.blocks.len(),
            block_of: self.block_of,
        }
    }

    fn refine_with(&mut self, s: u32) {
        // Pick the smaller of the first two fine blocks of `s` as splitter.
        let list = &self.compounds[s as usize];
        let (b0, b1) = (list[0], list[1]);
        let key = |b: u32| (self.blocks[b as usize].len(), b);
        let splitter = if key(b0) <= key(b1) { b0 } else { b1 };

        self.detach(splitter);
        if self.compounds[s as usize].len() >= 2 {
            self.pending.push(s);
        }

        let Block { start, end, .. } = self.blocks[splitter as usize];
        let members: Vec<u32> = self.elems[start as usize..end as usize].to_vec();

        // count(x, splitter) for every predecessor x of the splitter.
        let mut sources = Vec::new();
        for &y in &members {
            for &e in &self.preds[y as usize] {
                let x = self.edge_src[e as usize] as usize;
                if self.new_rec[x] == NONE {
                    self.new_rec[x] = self.counts.len() as u32;
                    self.counts.push(0);
                    self.old_rec[x] = self.edge_count[e as usize];
                    sources.push(x as u32);
                }
                self.counts[self.new_rec[x] as usize] += 1;
            }
        }

        // Split by "has a child in the splitter".
        for &x in &sources {
            self.mark(x);
        }
        self.split_marked();

        // Split by "has a child in the rest of s": nodes whose every child
        // in s lies in the splitter are separated from the others.
        for &x in &sources {
            let (new, old) = (self.new_rec[x as usize], self.old_rec[x as usize]);
            if self.counts[new as usize] == self.counts[old as usize] {
                self.mark(x);
            }
        }
        self.split_marked();

        for &y in &members {
            for &e in &self.preds[y as usize] {
                let x = self.edge_src[e as usize] as usize;
                self.counts[self.edge_count[e as usize] as usize] -= 1;
                self.edge_count[e as usize] = self.new_rec[x];
            }
        }
        for &x in &sources {
            self.new_rec[x as usize] = NONE;
            self.old_rec[x as usize] = NONE;
        }
    }

    /// Moves fine block `b` out of its compound block into a fresh one.
    fn detach(&mut self, b: u32) {
        let Block {
            compound,
            pos_in_compound,
            ..
        } = self.blocks[b as usize];
        let list = &mut self.compounds[compound as usize];
        list.swap_remove(pos_in_compound as usize);
        if let Some(&moved) = list.get(pos_in_compound as usize) {
            self.blocks[moved as usize].pos_in_compound = pos_in_compound;
        }
        let fresh = self.compounds.len() as u32;
        self.compounds.push(vec![b]);
        let block = &mut self.blocks[b as usize];
        block.compound = fresh;
        block.pos_in_compound = 0;
    }

    fn mark(&mut self, x: u32) {
        let b = self.block_of[x as usize];
        let block = self.blocks[b as usize];
        let boundary = block.start + block.marked;
        let at = self.loc[x as usize];
        if at < boundary {
            return;
        }
        if block.marked == 0 {
            self.touched.push(b);
        }
        let other = self.elems[boundary as usize];
        self.elems.swap(at as usize, boundary as usize);
        self.loc[other as usize] = at;
        self.loc[x as usize] = boundary;
        self.blocks[b as usize].marked += 1;
    }

    /// Splits every touched block into its marked and unmarked parts. The
    /// marked part always becomes the new block, and touched blocks are
    /// processed in id order.
    fn split_marked(&mut self) {
        let mut touched = std::mem::take(&mut self.touched);
        touched.sort_unstable();
        for &b in &touched {
            let block = self.blocks[b as usize];
            let marked = block.marked;
            self.blocks[b as usize].marked = 0;
            if marked == block.len() {
                continue;
            }
            let nb = self.blocks.len() as u32;
            let split_at = block.start + marked;
            let compound = block.compound;
            let list = &mut self.compounds[compound as usize];
            list.push(nb);
            let pos = (list.len() - 1) as u32;
            if list.len() == 2 {
                self.pending.push(compound);
            }
            self.blocks.push(Block {
                start: block.start,
                end: split_at,
                marked: 0,
                compound,
                pos_in_compound: pos,
            });
            self.blocks[b as usize].start = split_at;
            for i in block.start..split_at {
                self.block_of[self.elems[i as usize] as usize] = nb;
            }
        }
        touched.clear();
        self.touched = touched;
    }
}
