"""l-MDS linear codes over finite fields."""
