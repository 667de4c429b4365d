namespace pmp {}  // placeholder until the module lands
