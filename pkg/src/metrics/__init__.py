"""BFS distance machinery: eccentricities, centers, neighborhoods, girth, bridges."""
