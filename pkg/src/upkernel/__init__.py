"""Up-color kernels in vertex-colored digraphs."""
