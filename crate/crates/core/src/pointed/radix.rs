/// Mixed-radix indexing of tuples, first coordinate most significant. This
/// matches the point order of [`crate::finspace::Product`].
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub(crate) struct Radix {
    dims: Vec<usize>,
    strides: Vec<usize>,
    total: usize,
}

impl Radix {
    pub(crate) fn new(dims: Vec<usize>) -> Self {
        let n = dims.len();
        let mut strides = vec![1usize; n];
        for i in (0..n.saturating_sub(1)).rev() {
            strides[i] = strides[i + 1] * dims[i + 1];
        }
        let total = dims.iter().product();
        Radix { dims, strides, total }
    }

    pub(crate) fn total(&self) -> usize {
        self.total
    }

    pub(crate) fn arity(&self) -> usize {
        self.dims.len()
    }

    pub(crate) fn stride(&self, i: usize) -> usize {
        self.strides[i]
    }

    pub(crate) fn encode(&self, coords: &[usize]) -> usize {
        coords.iter().zip(&self.strides).map(|(c, s)| c * s).sum()
    }

    pub(crate) fn decode_into(&self, index: usize, out: &mut [usize]) {
        for i in 0..self.dims.len() {
            out[i] = (index / self.strides[i]) % self.dims[i];
        }
    }

    pub(crate) fn decode(&self, index: usize) -> Vec<usize> {
        let mut out = vec![0; self.dims.len()];
        self.decode_into(index, &mut out);
        out
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn round_trip() {
        let r = Radix::new(vec![2, 3, 4]);
        assert_eq!(r.total(), 24);
        for i in 0..24 {
            assert_eq!(r.encode(&r.decode(i)), i);
        }
        assert_eq!(r.decode(5), vec![0, 1, 1]);
    }
}
