# Test package for h10-iwasawa
