//! Files and the catalog they live in.

use std::fmt;
use std::sync::Arc;

/// Index of a file in the catalog. Ids are dense in `[0, catalog.len())`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct FileId(pub usize);

impl fmt::Display for FileId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "f{}", self.0)
    }
}

/// A shareable resource described by a list of named attributes.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FileRecord {
    pub id: FileId,
    /// Ordered `(name, value)` pairs; never empty.
    pub attributes: Vec<(String, String)>,
}

impl FileRecord {
    pub fn new(id: FileId, attributes: Vec<(String, String)>) -> Self {
        assert!(
            !attributes.is_empty(),
            "a file must carry at least one attribute"
        );
        Self { id, attributes }
    }

    /// First value recorded under `name`, if any.
    pub fn attribute(&self, name: &str) -> Option<&str> {
        self.attributes
            .iter()
            .find(|(n, _)| n == name)
            .map(|(_, v)| v.as_str())
    }
}

/// The universe of files a model normalizes over.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Catalog {
    files: Vec<FileRecord>,
}

impl Catalog {
    /// Builds a catalog, asserting that ids are dense and in order.
    pub fn new(files: Vec<FileRecord>) -> Arc<Self> {
        assert!(!files.is_empty(), "catalog must not be empty");
        for (i, f) in files.iter().enumerate() {
            assert_eq!(f.id.0, i, "file ids must be dense in [0, len)");
        }
        Arc::new(Self { files })
    }

    pub fn len(&self) -> usize {
        self.files.len()
    }

    pub fn is_empty(&self) -> bool {
        self.files.is_empty()
    }

    pub fn file(&self, id: FileId) -> &FileRecord {
        &self.files[id.0]
    }

    pub fn contains(&self, id: FileId) -> bool {
        id.0 < self.files.len()
    }

    pub fn files(&self) -> &[FileRecord] {
        &self.files
    }

    /// Ids of all files whose `name` attribute equals `value`.
    pub fn files_with_attribute(&self, name: &str, value: &str) -> Vec<FileId> {
        self.files
            .iter()
            .filter(|f| f.attribute(name) == Some(value))
            .map(|f| f.id)
            .collect()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn attribute_lookup_takes_first_match() {
        let f = FileRecord::new(
            FileId(0),
            vec![
                ("genre".into(), "rock".into()),
                ("genre".into(), "jazz".into()),
            ],
        );
        assert_eq!(f.attribute("genre"), Some("rock"));
        assert_eq!(f.attribute("year"), None);
    }

    #[test]
    #[should_panic(expected = "dense")]
    fn catalog_rejects_sparse_ids() {
        Catalog::new(vec![FileRecord::new(
            FileId(3),
            vec![("a".into(), "b".into())],
        )]);
    }

    #[test]
    fn files_with_attribute_filters() {
        let c = Catalog::new(vec![
            FileRecord::new(FileId(0), vec![("genre".into(), "rock".into())]),
            FileRecord::new(FileId(1), vec![("genre".into(), "jazz".into())]),
            FileRecord::new(FileId(2), vec![("genre".into(), "rock".into())]),
        ]);
        assert_eq!(
            c.files_with_attribute("genre", "rock"),
            vec![FileId(0), FileId(2)]
        );
    }
}
