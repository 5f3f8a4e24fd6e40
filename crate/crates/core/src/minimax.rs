//! Exhaustive minimax solver, the independent reference the search engines
//! are checked against. Plain recursion with no pruning or caching; meant
//! for game trees small enough to walk completely.

use crate::games::{GameState, Player};

/// Exact game value from `Player::One`'s perspective under optimal play.
pub fn game_value<G: GameState>(state: &G) -> f64 {
    if let Some(v) = state.terminal_value() {
        return v;
    }
    let fold = match state.player_to_move() {
        Player::One => f64::max,
        Player::Two => f64::min,
    };
    state
        .legal_moves()
        .into_iter()
        .map(|mv| game_value(&state.apply(mv)))
        .reduce(fold)
        .expect("non-terminal state has moves")
}

/// Indices (into `legal_moves`) of all optimal root moves for the player
/// to move, plus the root value from `Player::One`'s perspective.
pub fn optimal_root_moves<G: GameState>(state: &G) -> (Vec<usize>, f64) {
    let values: Vec<f64> = state
        .legal_moves()
        .into_iter()
        .map(|mv| game_value(&state.apply(mv)))
        .collect();
    assert!(!values.is_empty(), "terminal root has no optimal move");
    let best = match state.player_to_move() {
        Player::One => values.iter().copied().fold(f64::NEG_INFINITY, f64::max),
        Player::Two => values.iter().copied().fold(f64::INFINITY, f64::min),
    };
    let moves = values
        .iter()
        .enumerate()
        .filter(|(_, &v)| v == best)
        .map(|(i, _)| i)
        .collect();
    (moves, best)
}

/// The single optimal root move index, or `None` when several tie.
pub fn unique_optimal_root_move<G: GameState>(state: &G) -> Option<usize> {
    let (moves, _) = optimal_root_moves(state);
    (moves.len() == 1).then(|| moves[0])
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::games::PTree;

    /// Explicit tree game for hand-checkable positions.
    #[derive(Debug, Clone)]
    pub(crate) enum Toy {
        Leaf(f64),
        Node(Player, Vec<Toy>),
    }

    impl GameState for Toy {
        type Move = usize;

        fn player_to_move(&self) -> Player {
            match self {
                Toy::Leaf(_) => Player::One,
                Toy::Node(p, _) => *p,
            }
        }

        fn legal_moves(&self) -> Vec<usize> {
            match self {
                Toy::Leaf(_) => Vec::new(),
                Toy::Node(_, kids) => (0..kids.len()).collect(),
            }
        }

        fn apply(&self, mv: usize) -> Self {
            match self {
                Toy::Leaf(_) => unreachable!("apply on terminal"),
                Toy::Node(_, kids) => kids[mv].clone(),
            }
        }

        fn is_terminal(&self) -> bool {
            matches!(self, Toy::Leaf(_))
        }

        fn terminal_value(&self) -> Option<f64> {
            match self {
                Toy::Leaf(v) => Some(*v),
                Toy::Node(..) => None,
            }
        }
    }

    #[test]
    fn depth_two_value_is_max_of_mins() {
        // One to move; Two replies. Child A -> min(1, 0) = 0,
        // child B -> min(0.5, 1) = 0.5. Root value max(0, 0.5) = 0.5.
        let root = Toy::Node(
            Player::One,
            vec![
                Toy::Node(Player::Two, vec![Toy::Leaf(1.0), Toy::Leaf(0.0)]),
                Toy::Node(Player::Two, vec![Toy::Leaf(0.5), Toy::Leaf(1.0)]),
            ],
        );
        assert_eq!(game_value(&root), 0.5);
        assert_eq!(unique_optimal_root_move(&root), Some(1));
    }

    #[test]
    fn minimizing_root_prefers_low_values() {
        let root = Toy::Node(
            Player::Two,
            vec![Toy::Leaf(1.0), Toy::Leaf(0.0), Toy::Leaf(0.5)],
        );
        assert_eq!(game_value(&root), 0.0);
        assert_eq!(unique_optimal_root_move(&root), Some(1));
    }

    #[test]
    fn ties_are_reported_as_non_unique() {
        let root = Toy::Node(Player::One, vec![Toy::Leaf(1.0), Toy::Leaf(1.0)]);
        let (moves, value) = optimal_root_moves(&root);
        assert_eq!(value, 1.0);
        assert_eq!(moves, vec![0, 1]);
        assert_eq!(unique_optimal_root_move(&root), None);
    }

    #[test]
    fn ptree_values_are_zero_or_one() {
        let root = PTree::new(3, 4, 0.4, 11).unwrap().root();
        let v = game_value(&root);
        assert!(v == 0.0 || v == 1.0);
    }
}
