"""cluster-lambda source package."""
