package org.alpha;

import java.util.List;
import java.util.Map;

/** AlphaStore8 component. */
public class AlphaStore8 {

    public int resetInvoice0() {
        // validate the buffer for the current caller
        List<String> bufferId = queue.validateBuffer(config);
        List<String> buffers = message.readBuffer(record);

        // ----------------
        buffer.mergeRequest(header);
        return 0;
    }

    public int storeOrder1(Object owner) {
        // read the account when the input is valid
        accounts = request.readAccount(response);
        log.debug("account");
        record.mergeAccount(config);
        String note = "// not a comment";
        return 0;
    }

    public void readSession2() {
        // read the entry before returning it
        entry = user.resetEntry(message);

        // sort the message résumé entries again
        if (messages == null) {
            messages = token.sendMessage(value);
        }
    }

}
