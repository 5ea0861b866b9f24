use crate::diagram::DiagramKey;

#[cfg(feature = "parallel")]
type Map<V> = dashmap::DashMap<DiagramKey, V>;
#[cfg(not(feature = "parallel"))]
type Map<V> = std::sync::Mutex<std::collections::HashMap<DiagramKey, V>>;

/// Shared memo table keyed by canonical diagram key. A disabled cache never stores anything,
/// which is how tests check that hits agree with recomputation.
pub struct MemoCache<V> {
    enabled: bool,
    map: Map<V>,
}

impl<V: Clone> MemoCache<V> {
    pub fn new(enabled: bool) -> Self {
        MemoCache { enabled, map: Map::default() }
    }

    pub fn enabled(&self) -> bool {
        self.enabled
    }

    #[cfg(feature = "parallel")]
    pub fn get(&self, k: &DiagramKey) -> Option<V> {
        if !self.enabled {
            return None;
        }
        self.map.get(k).map(|v| v.clone())
    }

    #[cfg(not(feature = "parallel"))]
    pub fn get(&self, k: &DiagramKey) -> Option<V> {
        if !self.enabled {
            return None;
        }
        self.map.lock().unwrap().get(k).cloned()
    }

    #[cfg(feature = "parallel")]
    pub fn insert(&self, k: DiagramKey, v: V) {
        if self.enabled {
            self.map.insert(k, v);
        }
    }

    #[cfg(not(feature = "parallel"))]
    pub fn insert(&self, k: DiagramKey, v: V) {
        if self.enabled {
            self.map.lock().unwrap().insert(k, v);
        }
    }

    #[cfg(feature = "parallel")]
    pub fn len(&self) -> usize {
        self.map.len()
    }

    #[cfg(not(feature = "parallel"))]
    pub fn len(&self) -> usize {
        self.map.lock().unwrap().len()
    }

    pub fn is_empty(&self) -> bool {
        self.len() == 0
    }
}
