//! Strongly connected components (iterative Tarjan).

/// Component labelling produced by [`tarjan`].
#[derive(Debug, Clone)]
pub struct Components {
    /// `comp[v]` is the component of `v`. Components are numbered in the order
    /// Tarjan closes them, which is a reverse topological order of the
    /// condensation.
    pub comp: Vec<usize>,
    pub count: usize,
}

impl Components {
    /// Members of every component, each list in ascending vertex order.
    pub fn members(&self) -> Vec<Vec<usize>> {
        let mut out = vec![Vec::new(); self.count];
        for (v, &c) in self.comp.iter().enumerate() {
            out[c].push(v);
        }
        out
    }
}

/// Tarjan's algorithm over vertices `0..n`, with successors given by `succ`.
///
/// Roots are tried in ascending order and successors in the order `succ`
/// yields them, so the labelling is deterministic.
pub fn tarjan<F, I>(n: usize, mut succ: F) -> Components
where
    F: FnMut(usize) -> I,
    I: IntoIterator<Item = usize>,
{
    const UNSEEN: usize = usize::MAX;
    let mut index = vec![UNSEEN; n];
    let mut low = vec![0usize; n];
    let mut on_stack = vec![false; n];
    let mut comp = vec![UNSEEN; n];
    let mut stack = Vec::new();
    let mut next_index = 0usize;
    let mut count = 0usize;

    let mut frames: Vec<(usize, I::IntoIter)> = Vec::new();
    for root in 0..n {
        if index[root] != UNSEEN {
            continue;
        }
        index[root] = next_index;
        low[root] = next_index;
        next_index += 1;
        stack.push(root);
        on_stack[root] = true;
        frames.push((root, succ(root).into_iter()));

        while let Some(frame) = frames.last_mut() {
            let v = frame.0;
            if let Some(w) = frame.1.next() {
                if index[w] == UNSEEN {
                    index[w] = next_index;
                    low[w] = next_index;
                    next_index += 1;
                    stack.push(w);
                    on_stack[w] = true;
                    let ws = succ(w).into_iter();
                    frames.push((w, ws));
                } else if on_stack[w] {
                    low[v] = low[v].min(index[w]);
                }
                continue;
            }
            frames.pop();
            if let Some(parent) = frames.last() {
                let p = parent.0;
                low[p] = low[p].min(low[v]);
            }
            if low[v] == index[v] {
                while let Some(w) = stack.pop() {
                    on_stack[w] = false;
                    comp[w] = count;
                    if w == v {
                        break;
                    }
                }
                count += 1;
            }
        }
    }
    Components { comp, count }
}
