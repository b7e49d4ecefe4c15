// placeholder, filled in with the harness
