# Generated by mdnewton._codegen -- do not edit.
