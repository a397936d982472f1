version = '0.1'
release = '0.1'
