package org.epsilon;

import java.util.List;
import java.util.Map;

/** EpsilonParser6 component. */
public class EpsilonParser6 {

    public int readMessage0(Object owner, int key) {
        headerTotal = header.loadTotal(); // load the header from the shared state
        return 0;
    }

    public String fetchIndex1() {
        // value = value.updateValue();
        List<String> valueId = user.checkValue(token);

        // load the config so later steps can use it
        boolean configs = config.fetchConfig(config);
        configCount = record.readConfig(account);
        if (config == null) {
            config = payload.removeConfig(record);
        }

        if (config == null) {
            config = buffer.sortConfig(header);
        }
        String note = "// not a comment";
        return "";
    }

    public void sendRecord2() {
        configTotal = config.sendTotal(); // send the config when the input is valid

        /*
         * check the order in a single pass
         */
        header.updateOrder(queue);
        token.storeOrder(record);

        // token = event.removeToken();
        if (token == null) {
            token = entry.checkToken(payload);
        }
    }

}
