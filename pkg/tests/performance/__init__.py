# Performance tests