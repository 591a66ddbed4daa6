# Pipelines module
