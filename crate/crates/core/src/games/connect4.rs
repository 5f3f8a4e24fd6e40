//! Four-in-a-row on a 5x5 board with gravity drops.
//!
//! Bitboard layout: each column owns `ROWS + 1` bits (one sentinel bit on
//! top keeps runs from wrapping between columns), so the four run
//! directions are bit strides 1, `ROWS`, `ROWS + 1`, and `ROWS + 2`.

use crate::error::{Error, Result};
use crate::games::{GameState, Player};

pub const COLS: usize = 5;
pub const ROWS: usize = 5;
const COL_STRIDE: usize = ROWS + 1;
const CELLS: u8 = (COLS * ROWS) as u8;

/// Current position: one bitboard per player plus drop heights.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct ConnectFour {
    boards: [u64; 2],
    heights: [u8; COLS],
    stones: u8,
    winner: Option<Player>,
}

impl Default for ConnectFour {
    fn default() -> Self {
        Self::new()
    }
}

impl ConnectFour {
    pub fn new() -> Self {
        Self {
            boards: [0, 0],
            heights: [0; COLS],
            stones: 0,
            winner: None,
        }
    }

    fn bit(col: usize, row: usize) -> u64 {
        1u64 << (col * COL_STRIDE + row)
    }

    fn side_index(player: Player) -> usize {
        match player {
            Player::One => 0,
            Player::Two => 1,
        }
    }

    fn has_four(board: u64) -> bool {
        for stride in [1, ROWS, ROWS + 1, ROWS + 2] {
            let pairs = board & (board >> stride);
            if pairs & (pairs >> (2 * stride)) != 0 {
                return true;
            }
        }
        false
    }

    /// Occupant of a cell, for inspection and tests.
    pub fn cell(&self, col: usize, row: usize) -> Option<Player> {
        let bit = Self::bit(col, row);
        if self.boards[0] & bit != 0 {
            Some(Player::One)
        } else if self.boards[1] & bit != 0 {
            Some(Player::Two)
        } else {
            None
        }
    }

    /// Replays a sequence of column drops from the empty board.
    pub fn from_drops(columns: &[u8]) -> Result<Self> {
        let mut state = Self::new();
        for &col in columns {
            if state.is_terminal() || !state.legal_moves().contains(&col) {
                return Err(Error::InvalidGameSpec(format!("illegal drop {col}")));
            }
            state = state.apply(col);
        }
        Ok(state)
    }
}

impl GameState for ConnectFour {
    type Move = u8;

    fn player_to_move(&self) -> Player {
        if self.stones % 2 == 0 {
            Player::One
        } else {
            Player::Two
        }
    }

    fn legal_moves(&self) -> Vec<u8> {
        if self.is_terminal() {
            return Vec::new();
        }
        (0..COLS as u8)
            .filter(|&c| self.heights[c as usize] < ROWS as u8)
            .collect()
    }

    fn apply(&self, mv: u8) -> Self {
        let col = mv as usize;
        debug_assert!(col < COLS && self.heights[col] < ROWS as u8);
        let player = self.player_to_move();
        let side = Self::side_index(player);
        let mut next = *self;
        next.boards[side] |= Self::bit(col, self.heights[col] as usize);
        next.heights[col] += 1;
        next.stones += 1;
        if Self::has_four(next.boards[side]) {
            next.winner = Some(player);
        }
        next
    }

    fn is_terminal(&self) -> bool {
        self.winner.is_some() || self.stones == CELLS
    }

    fn terminal_value(&self) -> Option<f64> {
        if !self.is_terminal() {
            return None;
        }
        Some(match self.winner {
            Some(Player::One) => 1.0,
            Some(Player::Two) => 0.0,
            None => 0.5,
        })
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    /// Straightforward scan over all length-4 lines; the independent
    /// reference for the bit-stride win check.
    fn naive_four(cells: &[[bool; COLS]; ROWS]) -> bool {
        let dirs = [(1i32, 0i32), (0, 1), (1, 1), (1, -1)];
        for row in 0..ROWS as i32 {
            for col in 0..COLS as i32 {
                for (dc, dr) in dirs {
                    let end_c = col + 3 * dc;
                    let end_r = row + 3 * dr;
                    if !(0..COLS as i32).contains(&end_c) || !(0..ROWS as i32).contains(&end_r)
                    {
                        continue;
                    }
                    if (0..4).all(|k| {
                        cells[(row + k * dr) as usize][(col + k * dc) as usize]
                    }) {
                        return true;
                    }
                }
            }
        }
        false
    }

    fn board_from_cells(cells: &[[bool; COLS]; ROWS]) -> u64 {
        let mut board = 0;
        for (row, line) in cells.iter().enumerate() {
            for (col, &set) in line.iter().enumerate() {
                if set {
                    board |= ConnectFour::bit(col, row);
                }
            }
        }
        board
    }

    #[test]
    fn vertical_win() {
        // One drops in column 0 every turn; Two wastes moves in column 1.
        let state = ConnectFour::from_drops(&[0, 1, 0, 1, 0, 1, 0]).unwrap();
        assert!(state.is_terminal());
        assert_eq!(state.terminal_value(), Some(1.0));
        assert!(state.legal_moves().is_empty());
    }

    #[test]
    fn horizontal_win_for_second_player() {
        // Two fills the bottom row across columns 1..4 while One stacks
        // three in column 0 and wastes one drop on column 1.
        let state = ConnectFour::from_drops(&[0, 1, 0, 2, 0, 3, 1, 4]).unwrap();
        assert_eq!(state.terminal_value(), Some(0.0));
    }

    #[test]
    fn diagonal_win() {
        // One builds the rising diagonal (0,0)-(3,3); Two's replies stay
        // scattered between column 0 and the bottom row.
        let state =
            ConnectFour::from_drops(&[0, 1, 1, 2, 2, 0, 2, 3, 3, 0, 3, 0, 3]).unwrap();
        assert_eq!(state.terminal_value(), Some(1.0));
    }

    #[test]
    fn gravity_fills_upward_and_full_columns_close() {
        let mut state = ConnectFour::new();
        for _ in 0..ROWS {
            state = state.apply(2);
        }
        assert_eq!(state.heights[2], ROWS as u8);
        assert!(!state.legal_moves().contains(&2));
        for row in 0..ROWS {
            let expect = if row % 2 == 0 { Player::One } else { Player::Two };
            assert_eq!(state.cell(2, row), Some(expect));
        }
    }

    #[test]
    fn players_alternate() {
        let state = ConnectFour::new();
        assert_eq!(state.player_to_move(), Player::One);
        let state = state.apply(0);
        assert_eq!(state.player_to_move(), Player::Two);
    }

    #[test]
    fn drawn_full_board_scores_one_half() {
        // Fills the board with One's stones exactly where
        // (2 * col + row) mod 4 < 2; every run direction then alternates
        // with period two, so nobody lines up four. The scanner below
        // re-verifies the fixture.
        let drops = [
            0, 1, 0, 1, 2, 0, 2, 0, 4, 2, 4, 2, 0, 3, 1, 3, 1, 4, 3, 4, 3, 1, 2, 3, 4,
        ];
        let state = ConnectFour::from_drops(&drops).unwrap();
        assert_eq!(state.stones, CELLS);
        let mut one = [[false; COLS]; ROWS];
        let mut two = [[false; COLS]; ROWS];
        for row in 0..ROWS {
            for col in 0..COLS {
                match state.cell(col, row) {
                    Some(Player::One) => one[row][col] = true,
                    Some(Player::Two) => two[row][col] = true,
                    None => panic!("hole at {col},{row}"),
                }
            }
        }
        assert!(!naive_four(&one), "fixture has a four for One");
        assert!(!naive_four(&two), "fixture has a four for Two");
        assert!(state.is_terminal());
        assert_eq!(state.terminal_value(), Some(0.5));
    }

    #[test]
    fn illegal_replays_are_rejected() {
        assert!(ConnectFour::from_drops(&[9]).is_err());
        assert!(ConnectFour::from_drops(&[0, 0, 0, 0, 0, 0]).is_err());
    }

    proptest! {
        #[test]
        fn bit_win_check_matches_naive_scan(bits in proptest::collection::vec(any::<bool>(), 25)) {
            let mut cells = [[false; COLS]; ROWS];
            for (i, &b) in bits.iter().enumerate() {
                cells[i / COLS][i % COLS] = b;
            }
            let board = board_from_cells(&cells);
            prop_assert_eq!(ConnectFour::has_four(board), naive_four(&cells));
        }
    }
}
