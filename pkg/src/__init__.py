# Trisection construction engine
