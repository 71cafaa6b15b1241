# Gauge Orbits Package
