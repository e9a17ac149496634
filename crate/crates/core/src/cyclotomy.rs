//! 2-cyclotomic cosets modulo odd `n`.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// One orbit of `i -> 2i mod n`. `members[0]` is the leader (smallest
/// member) and each following member is twice the previous one.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Coset {
    pub leader: u64,
    pub members: Vec<u64>,
}

impl Coset {
    pub fn size(&self) -> usize {
        self.members.len()
    }

    pub fn contains(&self, i: u64) -> bool {
        self.members.contains(&i)
    }
}

fn require_odd(n: u64) -> Result<()> {
    if n == 0 || n.is_multiple_of(2) {
        Err(Error::EvenLength(n))
    } else {
        Ok(())
    }
}

#[inline]
fn double(i: u64, n: u64) -> u64 {
    ((i as u128 * 2) % n as u128) as u64
}

/// Smallest `m >= 1` with `2^m = 1 (mod n)`.
pub fn ord_mod(n: u64) -> Result<u32> {
    require_odd(n)?;
    if n == 1 {
        return Ok(1);
    }
    let mut x = 2 % n;
    let mut m = 1u32;
    while x != 1 {
        x = double(x, n);
        m += 1;
    }
    Ok(m)
}

/// Size of the coset containing `s`, without building it.
pub fn coset_size(n: u64, s: u64) -> Result<usize> {
    require_odd(n)?;
    let s = s % n;
    let mut x = double(s, n);
    let mut size = 1;
    while x != s {
        x = double(x, n);
        size += 1;
    }
    Ok(size)
}

/// Leader (smallest member) of the coset containing `s`.
pub fn coset_leader(n: u64, s: u64) -> Result<u64> {
    require_odd(n)?;
    let s = s % n;
    let mut x = double(s, n);
    let mut min = s;
    while x != s {
        min = min.min(x);
        x = double(x, n);
    }
    Ok(min)
}

/// The coset containing `s`, computed on its own (no table).
pub fn coset_of(n: u64, s: u64) -> Result<Coset> {
    let leader = coset_leader(n, s)?;
    let mut members = vec![leader];
    let mut x = double(leader, n);
    while x != leader {
        members.push(x);
        x = double(x, n);
    }
    Ok(Coset { leader, members })
}

/// Complete partition of `Z_n` into cosets, ordered by ascending leader.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CosetTable {
    n: u64,
    cosets: Vec<Coset>,
    owner: Vec<u32>,
}

/// Largest modulus for which a full table is built.
pub const TABLE_LIMIT: u64 = 1 << 25;

pub fn all_cosets(n: u64) -> Result<CosetTable> {
    require_odd(n)?;
    if n > TABLE_LIMIT {
        return Err(Error::TooLarge(n));
    }
    let mut owner = vec![u32::MAX; n as usize];
    let mut cosets = Vec::new();
    for s in 0..n {
        if owner[s as usize] != u32::MAX {
            continue;
        }
        let idx = cosets.len() as u32;
        let mut members = vec![s];
        owner[s as usize] = idx;
        let mut x = double(s, n);
        while x != s {
            owner[x as usize] = idx;
            members.push(x);
            x = double(x, n);
        }
        cosets.push(Coset { leader: s, members });
    }
    Ok(CosetTable { n, cosets, owner })
}

impl CosetTable {
    pub fn n(&self) -> u64 {
        self.n
    }

    pub fn cosets(&self) -> &[Coset] {
        &self.cosets
    }

    pub fn leaders(&self) -> impl Iterator<Item = u64> + '_ {
        self.cosets.iter().map(|c| c.leader)
    }

    /// The coset owning residue `i mod n`.
    pub fn coset_containing(&self, i: u64) -> &Coset {
        &self.cosets[self.owner[(i % self.n) as usize] as usize]
    }

    pub fn is_leader(&self, i: u64) -> bool {
        self.coset_containing(i).leader == i % self.n
    }
}

/// One row of a [`LeaderRangeReport`].
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct LeaderCheck {
    pub s: u64,
    pub is_leader: bool,
    pub size: usize,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct LeaderRangeReport {
    pub n: u64,
    pub bound: u64,
    pub expected_size: usize,
    pub entries: Vec<LeaderCheck>,
    pub pass: bool,
}

/// Checks that every odd `s <= bound` leads its own coset of the expected size.
pub fn check_leader_range(n: u64, bound: u64, expected_size: usize) -> Result<LeaderRangeReport> {
    require_odd(n)?;
    let mut entries = Vec::new();
    for s in (1..=bound).step_by(2) {
        let is_leader = s < n && coset_leader(n, s)? == s;
        let size = coset_size(n, s)?;
        entries.push(LeaderCheck { s, is_leader, size });
    }
    let pass = entries
        .iter()
        .all(|e| e.is_leader && e.size == expected_size);
    Ok(LeaderRangeReport {
        n,
        bound,
        expected_size,
        entries,
        pass,
    })
}
