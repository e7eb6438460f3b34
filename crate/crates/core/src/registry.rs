//! Name-keyed registries of interchangeable strategies.

use crate::error::{Error, Result};

/// Ordered collection of boxed strategy objects looked up by name.
pub struct Registry<T: ?Sized> {
    kind: &'static str,
    entries: Vec<(&'static str, Box<T>)>,
}

impl<T: ?Sized> Registry<T> {
    pub fn new(kind: &'static str) -> Self {
        Registry {
            kind,
            entries: Vec::new(),
        }
    }

    /// Adds `item` under `name`, replacing any earlier entry with that name.
    pub fn register(&mut self, name: &'static str, item: Box<T>) -> &mut Self {
        match self.entries.iter_mut().find(|(n, _)| *n == name) {
            Some(slot) => slot.1 = item,
            None => self.entries.push((name, item)),
        }
        self
    }

    pub fn get(&self, name: &str) -> Result<&T> {
        self.entries
            .iter()
            .find(|(n, _)| *n == name)
            .map(|(_, item)| item.as_ref())
            .ok_or_else(|| Error::Unknown {
                kind: self.kind,
                name: name.to_string(),
            })
    }

    pub fn names(&self) -> Vec<&'static str> {
        self.entries.iter().map(|(n, _)| *n).collect()
    }

    pub fn iter(&self) -> impl Iterator<Item = (&'static str, &T)> {
        self.entries.iter().map(|(n, item)| (*n, item.as_ref()))
    }

    pub fn len(&self) -> usize {
        self.entries.len()
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }
}
